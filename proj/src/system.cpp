#include "ifsx/system.hpp"

#include "ifsx/errors.hpp"

#include <stdexcept>

namespace ifsx {

std::string osc_status_str(OscStatus s) {
    switch (s) {
        case OscStatus::unknown: return "unknown";
        case OscStatus::declared: return "declared";
        case OscStatus::witnessed: return "witnessed";
        case OscStatus::inherited: return "inherited";
    }
    return "?";
}

bool osc_attributed(OscStatus s) { return s != OscStatus::unknown; }

Scalar IfsSystem::max_ratio() const {
    Scalar m = maps[0].ratio;
    for (const auto& f : maps)
        if (f.ratio.hi() > m.hi()) m = f.ratio;
    return m;
}

Scalar IfsSystem::min_ratio() const {
    Scalar m = maps[0].ratio;
    for (const auto& f : maps)
        if (f.ratio.lo() < m.lo()) m = f.ratio;
    return m;
}

// Defined in dimension.cpp.
SimilarityDimension compute_dimension(const std::vector<Similitude>& maps, Mode mode,
                                      bool homogeneous, const Rat& width);

IfsSystem make_system(int dim, Mode mode, std::vector<Similitude> maps, OscStatus osc,
                      std::vector<Word> labels, const SystemOptions& opts) {
    if (dim < 1) throw std::invalid_argument("system dimension must be at least 1");
    if (maps.size() < 2) throw std::invalid_argument("a system needs at least two maps");
    for (const auto& f : maps)
        if (f.dim() != dim) throw std::invalid_argument("map dimension differs from system");
    if (labels.empty()) {
        labels.reserve(maps.size());
        for (int i = 0; i < static_cast<int>(maps.size()); ++i) labels.push_back(Word{i});
    } else if (labels.size() != maps.size()) {
        throw std::invalid_argument("label count differs from map count");
    }

    IfsSystem sys;
    sys.dim = dim;
    sys.mode = mode;
    sys.maps = std::move(maps);
    sys.labels = std::move(labels);
    sys.osc = osc;

    // Homogeneity: exact ratios must coincide; interval ratios must pairwise
    // overlap (their intersection then encloses the putative common value).
    bool homog = true;
    Rat lo = sys.maps[0].ratio.lo();
    Rat hi = sys.maps[0].ratio.hi();
    for (const auto& f : sys.maps) {
        lo = max(lo, f.ratio.lo());
        hi = min(hi, f.ratio.hi());
        if (lo > hi) {
            homog = false;
            break;
        }
    }
    if (mode == Mode::exact) {
        for (const auto& f : sys.maps)
            if (!(f.ratio.is_exact() && f.ratio.value() == sys.maps[0].ratio.value()))
                homog = false;
    }
    sys.homogeneous = homog;
    if (homog) sys.common_ratio = mode == Mode::exact ? sys.maps[0].ratio : Scalar::range(lo, hi);

    sys.sdim = compute_dimension(sys.maps, mode, homog, opts.dimension_width);
    return sys;
}

Similitude cylinder_map(const IfsSystem& sys, const Word& w) {
    if (w.empty()) throw std::invalid_argument("cylinder word must be nonempty");
    for (int s : w)
        if (s < 0 || s >= sys.count())
            throw std::invalid_argument("cylinder word symbol out of range: " +
                                        std::to_string(s + 1));
    Similitude acc = sys.maps[static_cast<std::size_t>(w[0])];
    for (std::size_t i = 1; i < w.size(); ++i)
        acc = compose(acc, sys.maps[static_cast<std::size_t>(w[i])]);
    return acc;
}

Scalar word_ratio(const IfsSystem& sys, const Word& w) {
    Scalar r = Scalar::exact(Rat(1));
    for (int s : w) {
        if (s < 0 || s >= sys.count()) throw std::invalid_argument("word symbol out of range");
        r *= sys.maps[static_cast<std::size_t>(s)].ratio;
    }
    return r;
}

namespace {

// Interval-mode systems keep double-representable endpoints; derived maps are
// rounded outward after each system-level operation.
Similitude round_map_out(Similitude f) {
    f.ratio = f.ratio.round_out_double();
    for (auto& row : f.rot.m)
        for (auto& e : row) e = e.round_out_double();
    for (auto& e : f.shift) e = e.round_out_double();
    return f;
}

} // namespace

IfsSystem ifs_compose(const IfsSystem& a, const IfsSystem& b) {
    if (a.dim != b.dim) throw std::invalid_argument("compose: system dimensions differ");
    if (a.mode != b.mode) throw std::invalid_argument("compose: system modes differ");
    std::vector<Similitude> maps;
    std::vector<Word> labels;
    maps.reserve(static_cast<std::size_t>(a.count()) * static_cast<std::size_t>(b.count()));
    for (int i = 0; i < a.count(); ++i) {
        for (int j = 0; j < b.count(); ++j) {
            Similitude h = compose(a.maps[static_cast<std::size_t>(i)],
                                   b.maps[static_cast<std::size_t>(j)]);
            if (a.mode == Mode::interval) h = round_map_out(std::move(h));
            maps.push_back(std::move(h));
            labels.push_back(word_concat(a.labels[static_cast<std::size_t>(i)],
                                         b.labels[static_cast<std::size_t>(j)]));
        }
    }
    const OscStatus osc = (osc_attributed(a.osc) && osc_attributed(b.osc))
                              ? OscStatus::inherited
                              : OscStatus::unknown;
    return make_system(a.dim, a.mode, std::move(maps), osc, std::move(labels));
}

IfsSystem ifs_power(const IfsSystem& a, int k, std::uint64_t map_budget) {
    if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= static_cast<std::uint64_t>(a.count());
        if (total > map_budget)
            throw BudgetError("power would produce " + std::to_string(total) +
                              "+ maps, over the budget of " + std::to_string(map_budget));
    }
    IfsSystem acc = a;
    for (int i = 1; i < k; ++i) acc = ifs_compose(acc, a);
    return acc;
}

} // namespace ifsx
