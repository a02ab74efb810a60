#include "ifsx/charvec.hpp"

#include "ifsx/attractor.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ifsx {

std::string CharVec::str() const {
    std::ostringstream os;
    os << '(';
    const int top = max_index();
    for (int n = 1; n <= top; ++n) {
        if (n > 1) os << ", ";
        os << at(n).str();
    }
    if (top > 0) os << ", ";
    os << "0, ...)";
    if (!exact) os << " [enclosure]";
    if (provisional) os << " [provisional]";
    return os.str();
}

std::string order_kind_str(OrderKind k) {
    switch (k) {
    case OrderKind::less: return "Less";
    case OrderKind::equal: return "Equal";
    case OrderKind::greater: return "Greater";
    case OrderKind::incomparable: return "Incomparable";
    }
    return "?";
}

CharVec characteristic_vector(const IfsSystem& sys, const ComponentPartition& partition) {
    std::size_t covered = 0;
    for (const auto& comp : partition.components) covered += comp.size();
    if (covered != sys.maps.size())
        throw std::invalid_argument("partition does not cover the index set of the system");

    CharVec out;
    out.provisional = partition.provisional;
    for (const auto& comp : partition.components) {
        const int n = static_cast<int>(comp.size());
        Scalar mass = Scalar::exact(Rat(0));
        for (int idx : comp)
            mass = mass + sys.sdim.rho_pow_s(sys.maps[static_cast<std::size_t>(idx)].ratio);
        auto [it, fresh] = out.entries.emplace(n, mass);
        if (!fresh) it->second = it->second + mass;
    }
    out.exact = true;
    for (const auto& [n, v] : out.entries)
        if (!v.is_exact()) out.exact = false;
    return out;
}

OrderResult compare(const CharVec& x, const CharVec& y) {
    const int top = std::max(x.max_index(), y.max_index());
    for (int n = top; n >= 1; --n) {
        const Scalar xn = x.at(n);
        const Scalar yn = y.at(n);
        const Cmp c = cmp(xn, yn);
        if (c == Cmp::equal) continue;
        OrderResult r;
        r.index = n;
        r.gap = (xn - yn).abs();
        switch (c) {
        case Cmp::less: r.kind = OrderKind::less; break;
        case Cmp::greater: r.kind = OrderKind::greater; break;
        default: r.kind = OrderKind::incomparable; break;
        }
        return r;
    }
    return OrderResult{OrderKind::equal, 0, Scalar::exact(Rat(0))};
}

CharVec linear_combine(const std::vector<Scalar>& coeffs, const std::vector<CharVec>& vecs) {
    if (coeffs.size() != vecs.size())
        throw std::invalid_argument("linear_combine: coefficient/vector count mismatch");
    if (coeffs.empty())
        throw std::invalid_argument("linear_combine: empty combination");
    Scalar sum = Scalar::exact(Rat(0));
    for (const Scalar& c : coeffs) {
        if (c.certainly_negative())
            throw std::invalid_argument("linear_combine: coefficient certifiably negative");
        sum = sum + c;
    }
    const Cmp unit = cmp(sum, Scalar::exact(Rat(1)));
    if (unit == Cmp::less || unit == Cmp::greater)
        throw std::invalid_argument("linear_combine: coefficient sum certifiably differs from 1 (sum " +
                                    sum.str() + ")");

    CharVec out;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        out.provisional = out.provisional || vecs[k].provisional;
        for (const auto& [n, v] : vecs[k].entries) {
            const Scalar term = coeffs[k] * v;
            auto [it, fresh] = out.entries.emplace(n, term);
            if (!fresh) it->second = it->second + term;
        }
    }
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second.is_exact_zero() ? out.entries.erase(it) : std::next(it);
    out.exact = unit == Cmp::equal;
    for (const auto& c : coeffs)
        if (!c.is_exact()) out.exact = false;
    for (const auto& v : vecs)
        if (!v.exact) out.exact = false;
    return out;
}

CharVec charvec_sub(const CharVec& x, const CharVec& y) {
    CharVec out = x;
    out.exact = x.exact && y.exact;
    out.provisional = x.provisional || y.provisional;
    for (const auto& [n, v] : y.entries) {
        auto [it, fresh] = out.entries.emplace(n, -v);
        if (!fresh) it->second = it->second - v;
    }
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second.is_exact_zero() ? out.entries.erase(it) : std::next(it);
    return out;
}

MonotonicityReport verify_monotonicity(const IfsSystem& phi, const IfsSystem& psi,
                                       const Budget& budget, const MonotonicityOptions& opts) {
    if (phi.dim != psi.dim)
        throw std::invalid_argument("verify_monotonicity: ambient dimensions differ");

    MonotonicityReport rep;

    if (!osc_attributed(phi.osc)) {
        rep.failure = "open set condition not attributed for the left system";
        return rep;
    }
    if (!osc_attributed(psi.osc)) {
        rep.failure = "open set condition not attributed for the right system";
        return rep;
    }

    const AttractorContext ctx_phi = make_context(phi);
    const AttractorContext ctx_psi = make_context(psi);

    const SscResult ssc = check_ssc(ctx_phi, budget);
    if (ssc.status == SscResult::Status::certified_ssc) {
        rep.failure = "left system satisfies strong separation; composition cannot merge components";
        return rep;
    }
    if (ssc.status == SscResult::Status::undecided) {
        rep.failure = "strong-separation status of the left system is undecided at this budget";
        rep.provisional = true;
        return rep;
    }

    if (opts.assume_same_attractor) {
        rep.attractor_evidence = Scalar::exact(Rat(0));
    } else {
        const Scalar diam_hi = diameter_bounds(ctx_phi, 2).second;
        const Rat threshold = opts.attractor_tolerance * diam_hi.hi();
        const AttractorEvidence ev = attractor_evidence(ctx_phi, ctx_psi, threshold,
                                                        opts.hausdorff_depth, budget.max_nodes);
        rep.attractor_evidence = ev.bound;
        if (!ev.within) {
            rep.failure = "same-attractor evidence insufficient: Hausdorff bound " +
                          ev.bound.str() + " stays above tolerance " + threshold.str() +
                          (ev.budget_stopped ? " (refinement stopped by the budget)"
                                             : " at the depth cap");
            rep.provisional = ev.budget_stopped;
            return rep;
        }
    }

    rep.preconditions_ok = true;

    const IfsSystem composite = ifs_compose(phi, psi);
    const AttractorContext ctx_comp = make_context(composite);

    const AdjacencyGraph g_psi = adjacency_graph(ctx_psi, budget);
    const ComponentPartition part_psi = components(g_psi);
    const AdjacencyGraph g_comp = adjacency_graph(ctx_comp, budget);
    const ComponentPartition part_comp = components(g_comp);

    rep.gamma_psi = characteristic_vector(psi, part_psi);
    rep.gamma_composite = characteristic_vector(composite, part_comp);
    rep.order = compare(rep.gamma_psi, rep.gamma_composite);
    rep.strict_increase = rep.order.kind == OrderKind::less;
    rep.provisional = rep.gamma_psi.provisional || rep.gamma_composite.provisional;

    // A component merging cylinders with distinct first factors is the
    // structural driver of the strict step; report them by provenance label.
    const int n_psi = psi.count();
    for (const auto& comp : part_comp.components) {
        std::set<int> firsts;
        for (int m : comp) firsts.insert(m / n_psi);
        if (firsts.size() < 2) continue;
        std::vector<Word> labels;
        labels.reserve(comp.size());
        for (int m : comp) labels.push_back(composite.labels[static_cast<std::size_t>(m)]);
        rep.merged_components.push_back(std::move(labels));
    }
    return rep;
}

} // namespace ifsx
