#include "ifsx/document.hpp"

#include "ifsx/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ifsx {

namespace {

using json = nlohmann::ordered_json;

std::pair<int, int> position_of(std::string_view text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Best-effort source position of a quoted token, for validation diagnostics.
std::pair<int, int> locate_token(std::string_view text, const std::string& token) {
    const std::string quoted = "\"" + token + "\"";
    const std::size_t at = text.find(quoted);
    if (at == std::string_view::npos) return {0, 0};
    return position_of(text, at);
}

// Best-effort source anchor for per-map diagnostics: the n-th "ratio" key,
// which opens the n-th map object in every document this library emits.
std::pair<int, int> locate_map(std::string_view text, int index) {
    std::size_t at = std::string_view::npos;
    std::size_t from = 0;
    for (int seen = 0; seen < index; ++seen) {
        at = text.find("\"ratio\"", from);
        if (at == std::string_view::npos) return {0, 0};
        from = at + 1;
    }
    return position_of(text, at);
}

[[noreturn]] void fail_at(const std::string& what, std::pair<int, int> pos) {
    std::ostringstream os;
    os << what;
    if (pos.first > 0) os << " (line " << pos.first << ", column " << pos.second << ")";
    throw ParseError(os.str(), pos.first, pos.second);
}

[[noreturn]] void fail(std::string_view text, const std::string& what,
                       const std::string& token = {}) {
    fail_at(what, token.empty() ? std::pair<int, int>{0, 0} : locate_token(text, token));
}

Rat parse_rat(std::string_view text, const json& v, Mode mode, const std::string& field) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (auto r = Rat::parse(s)) return *r;
        fail(text, "malformed rational in " + field + ": \"" + s + "\"", s);
    }
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_number_float()) {
        if (mode == Mode::exact)
            fail(text, "floating literal in " + field + " not allowed in exact mode");
        return Rat::from_double(v.get<double>());
    }
    fail(text, field + " must be a rational string");
}

Scalar parse_scalar(std::string_view text, const json& v, Mode mode, const std::string& field) {
    if (v.is_object()) {
        if (mode == Mode::exact)
            fail(text, field + ": interval scalars {\"lo\",\"hi\"} are only valid in interval "
                       "mode");
        if (!v.contains("lo") || !v.contains("hi"))
            fail(text, field + ": interval scalar needs both \"lo\" and \"hi\"");
        const Rat lo = parse_rat(text, v.at("lo"), mode, field + ".lo");
        const Rat hi = parse_rat(text, v.at("hi"), mode, field + ".hi");
        if (hi < lo) fail(text, field + ": interval scalar has lo > hi");
        return Scalar::range(lo, hi);
    }
    return Scalar::exact(parse_rat(text, v, mode, field));
}

json scalar_json(const Scalar& s) {
    if (s.is_exact()) return json(s.value().str());
    json o;
    o["lo"] = s.lo().str();
    o["hi"] = s.hi().str();
    return o;
}

} // namespace

IfsSystem parse_document(std::string_view text, const SystemOptions& opts) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("invalid JSON: " + std::string(e.what()) + " (line " +
                             std::to_string(line) + ", column " + std::to_string(column) + ")",
                         line, column);
    }

    if (!doc.is_object()) fail(text, "document must be a JSON object");
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer())
        fail(text, "missing integer field \"dimension\"", "dimension");
    const int dim = doc.at("dimension").get<int>();
    if (dim < 1) fail(text, "dimension must be at least 1", "dimension");

    Mode mode = Mode::exact;
    if (doc.contains("mode")) {
        const std::string m = doc.at("mode").is_string() ? doc.at("mode").get<std::string>() : "";
        if (m == "exact")
            mode = Mode::exact;
        else if (m == "interval")
            mode = Mode::interval;
        else
            fail(text, "mode must be \"exact\" or \"interval\"", "mode");
    }

    if (!doc.contains("maps") || !doc.at("maps").is_array())
        fail(text, "missing array field \"maps\"", "maps");
    const json& jmaps = doc.at("maps");
    if (jmaps.size() < 2) fail(text, "a system needs at least 2 maps", "maps");

    std::vector<Similitude> maps;
    maps.reserve(jmaps.size());
    int index = 0;
    for (const json& jm : jmaps) {
        ++index;
        const std::string where = "map " + std::to_string(index);
        if (!jm.is_object()) fail(text, where + " must be an object");
        if (!jm.contains("ratio")) fail(text, where + " is missing \"ratio\"");
        if (!jm.contains("orthogonal")) fail(text, where + " is missing \"orthogonal\"");
        if (!jm.contains("translation")) fail(text, where + " is missing \"translation\"");

        Scalar ratio = parse_scalar(text, jm.at("ratio"), mode, where + " ratio");

        const json& jmat = jm.at("orthogonal");
        if (!jmat.is_array() || jmat.size() != static_cast<std::size_t>(dim))
            fail(text, where + ": orthogonal must be a " + std::to_string(dim) + "x" +
                           std::to_string(dim) + " matrix");
        Mat m;
        for (const json& jrow : jmat) {
            if (!jrow.is_array() || jrow.size() != static_cast<std::size_t>(dim))
                fail(text, where + ": orthogonal must be a " + std::to_string(dim) + "x" +
                               std::to_string(dim) + " matrix");
            Vec row;
            for (const json& jc : jrow)
                row.push_back(parse_scalar(text, jc, mode, where + " orthogonal entry"));
            m.push_back(std::move(row));
        }

        const json& jtr = jm.at("translation");
        if (!jtr.is_array() || jtr.size() != static_cast<std::size_t>(dim))
            fail(text, where + ": translation must have " + std::to_string(dim) + " entries");
        Vec shift;
        for (const json& jc : jtr)
            shift.push_back(parse_scalar(text, jc, mode, where + " translation entry"));

        try {
            maps.push_back(make_similitude(ratio, make_orthogonal(m, mode), std::move(shift)));
        } catch (const std::invalid_argument& e) {
            fail_at(where + ": " + e.what(), locate_map(text, index));
        }
    }

    OscStatus osc = OscStatus::unknown;
    if (doc.contains("attributes")) {
        const json& attrs = doc.at("attributes");
        if (!attrs.is_object()) fail(text, "attributes must be an object", "attributes");
        if (attrs.contains("osc")) {
            const std::string o =
                attrs.at("osc").is_string() ? attrs.at("osc").get<std::string>() : "";
            if (o == "declared")
                osc = OscStatus::declared;
            else if (o == "witnessed")
                osc = OscStatus::witnessed;
            else if (o == "inherited")
                osc = OscStatus::inherited;
            else
                fail(text, "attributes.osc must be \"declared\" or \"witnessed\"", "osc");
        }
    }

    try {
        return make_system(dim, mode, std::move(maps), osc, {}, opts);
    } catch (const std::invalid_argument& e) {
        fail(text, e.what(), "maps");
    }
}

IfsSystem load_document(const std::string& path, const SystemOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), opts);
}

std::string serialize_document(const IfsSystem& sys, const std::string& notes) {
    json doc;
    doc["dimension"] = sys.dim;
    doc["mode"] = sys.mode == Mode::exact ? "exact" : "interval";
    doc["maps"] = json::array();
    for (const Similitude& f : sys.maps) {
        json jm;
        jm["ratio"] = scalar_json(f.ratio);
        json mat = json::array();
        for (const Vec& row : f.rot.m) {
            json jrow = json::array();
            for (const Scalar& c : row) jrow.push_back(scalar_json(c));
            mat.push_back(std::move(jrow));
        }
        jm["orthogonal"] = std::move(mat);
        json tr = json::array();
        for (const Scalar& c : f.shift) tr.push_back(scalar_json(c));
        jm["translation"] = std::move(tr);
        doc["maps"].push_back(std::move(jm));
    }
    if (sys.osc != OscStatus::unknown || !notes.empty()) {
        json attrs;
        if (sys.osc != OscStatus::unknown) attrs["osc"] = osc_status_str(sys.osc);
        if (!notes.empty()) attrs["notes"] = notes;
        doc["attributes"] = std::move(attrs);
    }
    return doc.dump(2) + "\n";
}

} // namespace ifsx
