#include "ifsx/report.hpp"

#include "ifsx/attractor.hpp"

#include <json.hpp>

#include <sstream>

namespace ifsx {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDecimalDigits = 12;

json scalar_json(const Scalar& s) {
    if (s.is_exact()) return json(s.value().str());
    json o;
    o["lo"] = s.lo().str();
    o["hi"] = s.hi().str();
    return o;
}

json pair_list_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (const auto& [i, j] : pairs) arr.push_back(json::array({i + 1, j + 1}));
    return arr;
}

json components_json(const ComponentPartition& p) {
    json arr = json::array();
    for (const auto& comp : p.components) {
        json c = json::array();
        for (int i : comp) c.push_back(i + 1);
        arr.push_back(std::move(c));
    }
    return arr;
}

json gamma_json(const CharVec& v) {
    json arr = json::array();
    for (const auto& [n, s] : v.entries) arr.push_back(json::array({n, scalar_json(s)}));
    return arr;
}

json sdim_json(const SimilarityDimension& sd) {
    json o;
    o["exact"] = sd.exact_value ? json(sd.exact_value->str()) : json(nullptr);
    o["enclosure"] = scalar_json(sd.enclosure);
    o["approx"] = sd.enclosure.lo().decimal(kDecimalDigits);
    return o;
}

std::string word_list_str(const std::vector<Word>& words) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) os << ", ";
        os << word_str(words[i]);
    }
    os << '}';
    return os.str();
}

json order_obj(const OrderResult& r) {
    json o;
    o["kind"] = order_kind_str(r.kind);
    o["index"] = r.index;
    o["gap"] = scalar_json(r.gap);
    return o;
}

json band_obj(const BandParams& b) {
    json o;
    o["ell"] = b.ell;
    o["eps"] = scalar_json(b.eps);
    o["band"] = json::array({scalar_json(b.band_lo), scalar_json(b.band_hi)});
    return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

AnalysisReport analyze(const IfsSystem& sys, const Budget& budget) {
    AnalysisReport r;
    r.dim = sys.dim;
    r.mode = sys.mode;
    r.n_maps = sys.count();
    r.homogeneous = sys.homogeneous;
    r.sdim = sys.sdim;
    r.osc = sys.osc;
    const AttractorContext ctx = make_context(sys);
    r.graph = adjacency_graph(ctx, budget);
    r.partition = components(r.graph);
    r.gamma = characteristic_vector(sys, r.partition);
    r.certified = r.graph.fully_certified();
    return r;
}

std::string analysis_json(const AnalysisReport& r) {
    json o;
    o["dimension"] = r.dim;
    o["mode"] = r.mode == Mode::exact ? "exact" : "interval";
    o["maps"] = r.n_maps;
    o["homogeneous"] = r.homogeneous;
    o["osc"] = osc_status_str(r.osc);
    o["similarity_dimension"] = sdim_json(r.sdim);
    json adj;
    adj["edges"] = pair_list_json(r.graph.edges);
    adj["undecided"] = pair_list_json(r.graph.undecided);
    o["adjacency"] = std::move(adj);
    o["components"] = components_json(r.partition);
    o["gamma"] = gamma_json(r.gamma);
    o["certification"] = r.certified ? "certified" : "provisional";
    return dump(o);
}

std::string analysis_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "system: " << r.n_maps << " maps in dimension " << r.dim << " ("
       << (r.mode == Mode::exact ? "exact" : "interval") << " mode, "
       << (r.homogeneous ? "homogeneous" : "non-homogeneous") << ", osc "
       << osc_status_str(r.osc) << ")\n";
    os << "similarity dimension: ";
    if (r.sdim.exact_value)
        os << r.sdim.exact_value->str() << " (exact)";
    else
        os << r.sdim.enclosure.str() << " ~ " << r.sdim.enclosure.lo().decimal(kDecimalDigits);
    os << "\n";
    os << "adjacency edges:";
    if (r.graph.edges.empty()) os << " none";
    for (const auto& [i, j] : r.graph.edges) os << " (" << i + 1 << "," << j + 1 << ")";
    os << "\n";
    if (!r.graph.undecided.empty()) {
        os << "undecided pairs:";
        for (const auto& [i, j] : r.graph.undecided) os << " (" << i + 1 << "," << j + 1 << ")";
        os << "\n";
    }
    os << "components:";
    for (const auto& comp : r.partition.components) {
        os << " {";
        for (std::size_t t = 0; t < comp.size(); ++t) os << (t ? "," : "") << comp[t] + 1;
        os << "}";
    }
    os << "\n";
    os << "gamma: " << r.gamma.str() << "\n";
    os << "certification: " << (r.certified ? "certified" : "provisional") << "\n";
    return os.str();
}

std::string order_json(const OrderResult& r) { return dump(order_obj(r)); }

std::string order_text(const OrderResult& r) {
    std::ostringstream os;
    os << order_kind_str(r.kind);
    if (r.kind != OrderKind::equal)
        os << " (deciding index " << r.index << ", gap " << r.gap.str() << ")";
    os << "\n";
    return os.str();
}

std::string chain_json(const PowerChain& c) {
    json o;
    json gs = json::array();
    for (const CharVec& g : c.gammas) gs.push_back(gamma_json(g));
    o["gammas"] = std::move(gs);
    json st = json::array();
    for (const OrderResult& s : c.steps) st.push_back(order_obj(s));
    o["steps"] = std::move(st);
    o["all_strict"] = c.all_strict;
    o["certification"] = c.provisional ? "provisional" : "certified";
    return dump(o);
}

std::string chain_text(const PowerChain& c) {
    std::ostringstream os;
    for (std::size_t k = 0; k < c.gammas.size(); ++k) {
        os << "gamma(power " << k + 1 << ") = " << c.gammas[k].str() << "\n";
        if (k + 1 < c.gammas.size() && k < c.steps.size())
            os << "  step " << k + 1 << " -> " << k + 2 << ": "
               << order_kind_str(c.steps[k].kind) << " (index " << c.steps[k].index << ")\n";
    }
    os << "chain: " << (c.all_strict ? "strictly increasing" : "not certified strict") << "\n";
    os << "certification: " << (c.provisional ? "provisional" : "certified") << "\n";
    return os.str();
}

std::string harness_json(const HarnessReport& r) {
    json o;
    o["status"] = harness_status_str(r.status);
    o["reason"] = r.reason;
    o["attractor_evidence"] = scalar_json(r.attractor_evidence);
    o["psi_power"] = r.psi_power;
    o["theta_power"] = r.theta_power;
    o["delta"] = scalar_json(r.delta);
    o["band"] = band_obj(r.band);
    json cells = json::array();
    for (const auto& cell : r.cells.cells) {
        json c = json::array();
        for (int i : cell) c.push_back(i + 1);
        cells.push_back(std::move(c));
    }
    o["cells"] = std::move(cells);
    json traces = json::array();
    for (const CellTrace& t : r.cell_traces) {
        json jt;
        jt["cell"] = t.j + 1;
        jt["quotient_ratio"] = scalar_json(t.quotient_ratio);
        jt["k"] = t.k;
        jt["step"] = order_obj(t.step);
        jt["versus_theta"] = order_obj(t.versus_theta);
        traces.push_back(std::move(jt));
    }
    o["cell_traces"] = std::move(traces);
    if (r.decomposition_ran) {
        json d;
        d["components_within_cells"] = r.decomposition.components_within_cells;
        d["quotient_components_match"] = r.decomposition.quotient_components_match;
        d["gamma_theta"] = gamma_json(r.decomposition.gamma_theta);
        json coeffs = json::array();
        for (const Scalar& c : r.decomposition.coefficients) coeffs.push_back(scalar_json(c));
        d["coefficients"] = std::move(coeffs);
        d["residual"] = gamma_json(r.decomposition.residual);
        d["residual_zero"] = r.decomposition.residual_zero;
        o["decomposition"] = std::move(d);
    }
    o["note"] = r.note;
    return dump(o);
}

std::string harness_text(const HarnessReport& r) {
    std::ostringstream os;
    os << "status: " << harness_status_str(r.status) << "\n";
    if (!r.reason.empty()) os << "reason: " << r.reason << "\n";
    if (!r.attractor_evidence.is_exact_zero())
        os << "attractor evidence (cross Hausdorff bound): " << r.attractor_evidence.str()
           << "\n";
    if (r.theta_power > 0) {
        os << "separated system power used: " << r.psi_power << "\n";
        os << "delta: " << r.delta.str() << "\n";
        os << "band: ell = " << r.band.ell << ", eps = " << r.band.eps.str() << ", band = ["
           << r.band.band_lo.str() << ", " << r.band.band_hi.str() << ")\n";
        os << "theta = left system to the power " << r.theta_power << "\n";
        for (std::size_t j = 0; j < r.cells.cells.size(); ++j) {
            os << "cell " << j + 1 << ": {";
            const auto& cell = r.cells.cells[j];
            for (std::size_t t = 0; t < cell.size(); ++t) os << (t ? "," : "") << cell[t] + 1;
            os << "}";
            if (j < r.cell_traces.size()) {
                const CellTrace& tr = r.cell_traces[j];
                os << " ratio " << tr.quotient_ratio.str() << ", k = " << tr.k << ", step "
                   << order_kind_str(tr.step.kind) << ", versus theta "
                   << order_kind_str(tr.versus_theta.kind);
            }
            os << "\n";
        }
        if (r.decomposition_ran) {
            os << "decomposition residual: "
               << (r.decomposition.residual_zero ? "zero" : r.decomposition.residual.str())
               << "\n";
        }
    }
    os << "note: " << r.note << "\n";
    return os.str();
}

std::string monotonicity_json(const MonotonicityReport& r) {
    json o;
    o["preconditions_ok"] = r.preconditions_ok;
    if (!r.failure.empty()) o["failure"] = r.failure;
    o["attractor_evidence"] = scalar_json(r.attractor_evidence);
    o["gamma_right"] = gamma_json(r.gamma_psi);
    o["gamma_composite"] = gamma_json(r.gamma_composite);
    o["order"] = order_obj(r.order);
    o["strict_increase"] = r.strict_increase;
    json merged = json::array();
    for (const auto& comp : r.merged_components) merged.push_back(word_list_str(comp));
    o["merged_components"] = std::move(merged);
    o["certification"] = r.provisional ? "provisional" : "certified";
    return dump(o);
}

std::string monotonicity_text(const MonotonicityReport& r) {
    std::ostringstream os;
    if (!r.preconditions_ok) {
        os << "preconditions failed: " << r.failure << "\n";
        return os.str();
    }
    os << "gamma(right system) = " << r.gamma_psi.str() << "\n";
    os << "gamma(composite)    = " << r.gamma_composite.str() << "\n";
    os << "order: " << order_kind_str(r.order.kind) << " (deciding index " << r.order.index
       << ")\n";
    os << "strict increase: " << (r.strict_increase ? "yes" : "no") << "\n";
    for (const auto& comp : r.merged_components)
        os << "merged component: " << word_list_str(comp) << "\n";
    os << "certification: " << (r.provisional ? "provisional" : "certified") << "\n";
    return os.str();
}

} // namespace ifsx
