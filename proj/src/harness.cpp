#include "ifsx/harness.hpp"

#include "ifsx/attractor.hpp"
#include "ifsx/distance.hpp"
#include "ifsx/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ifsx {

namespace {

constexpr int kScanCap = 100000; // exponent scans are logarithmic; guard anyway

std::string ordinal(int i) { return std::to_string(i + 1); } // 1-based display

} // namespace

Scalar min_gap(const AttractorContext& ctx, const Budget& budget) {
    const int n = ctx.sys->count();
    bool first = true;
    Rat lo, hi;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const DistanceBounds d =
                set_distance(ctx, {Word{i}}, {Word{j}}, budget);
            if (d.intersect)
                throw std::invalid_argument("min_gap: images " + ordinal(i) + " and " +
                                            ordinal(j) + " intersect (not strongly separated)");
            if (!(d.lower.lo().sign() > 0))
                throw std::invalid_argument("min_gap: separation of images " + ordinal(i) +
                                            " and " + ordinal(j) +
                                            " undecided at this budget");
            if (first || d.lower.lo() < lo) lo = d.lower.lo();
            if (first || d.upper.hi() < hi) hi = d.upper.hi();
            first = false;
        }
    }
    if (first) throw std::invalid_argument("min_gap: system has no pairs");
    // min of pair lowers <= lower of the upper-minimizing pair <= min of
    // pair uppers, so the range is well formed.
    return Scalar::range(lo, hi);
}

BandParams choose_band(const Scalar& rho, const IfsSystem& psi, const Scalar& delta,
                       const Scalar& diam_upper) {
    if (!(delta.lo().sign() > 0))
        throw std::invalid_argument("choose_band: delta is not certifiably positive");
    if (!(diam_upper.hi().sign() > 0))
        throw std::invalid_argument("choose_band: diameter bound is not positive");
    if (cmp(psi.max_ratio(), rho) != Cmp::less)
        throw std::invalid_argument(
            "choose_band: some ratio of the separated system is not certifiably below the "
            "reference ratio; iterate it first");
    if (!(delta.lo() < diam_upper.hi()))
        throw std::invalid_argument("choose_band: gap not certifiably below the diameter");

    const Scalar min_r = psi.min_ratio();
    BandParams out;
    Scalar power = Scalar::exact(Rat(1));
    for (int ell = 1; ell <= kScanCap; ++ell) {
        power = power * rho;
        const Cmp c = cmp(power, min_r);
        if (c == Cmp::less) {
            out.ell = ell;
            break;
        }
        if (c == Cmp::unknown)
            throw std::invalid_argument(
                "choose_band: comparison of rho^ell with the smallest ratio is undecided at "
                "current precision");
    }
    if (out.ell == 0)
        throw std::invalid_argument("choose_band: no power of rho fell below the smallest ratio");

    const Rat eps = power.lo() * delta.lo() / diam_upper.hi();
    out.eps = Scalar::exact(eps);
    out.band_hi = out.eps;
    out.band_lo = Scalar::exact(rho.lo() * eps);
    return out;
}

int band_exponent(const Scalar& rho, const BandParams& band) {
    Scalar power = Scalar::exact(Rat(1));
    for (int k = 1; k <= kScanCap; ++k) {
        power = power * rho;
        const Cmp upper = cmp(power, band.band_hi);
        if (upper == Cmp::unknown)
            throw std::invalid_argument("band_exponent: band membership undecided at current "
                                        "precision");
        if (upper != Cmp::less) continue;
        const Cmp lower = cmp(power, band.band_lo);
        if (lower == Cmp::unknown)
            throw std::invalid_argument("band_exponent: band membership undecided at current "
                                        "precision");
        if (lower == Cmp::less)
            throw IncompatibleInputs("band_exponent: rho^" + std::to_string(k) +
                                     " skipped past the band");
        return k;
    }
    throw std::invalid_argument("band_exponent: exponent scan cap exceeded");
}

CellPartition partition_cells(const AttractorContext& theta, const AttractorContext& psi,
                              const Scalar& delta, const Budget& budget) {
    const IfsSystem& th = *theta.sys;
    const IfsSystem& ps = *psi.sys;
    if (th.dim != ps.dim)
        throw std::invalid_argument("partition_cells: ambient dimensions differ");
    if (!(delta.lo().sign() > 0))
        throw std::invalid_argument("partition_cells: delta is not certifiably positive");

    // Small-image precondition: every theta image has diameter below delta.
    const Scalar diam_theta = diameter_bounds(theta, 2).second;
    if (!(th.max_ratio().hi() * diam_theta.hi() < delta.lo()))
        throw std::invalid_argument(
            "partition_cells: theta images are not certifiably smaller than the gap");

    // Per-cell covers of the separated system at resolution delta/8.
    const Rat target = delta.lo() / Rat(8);
    const std::vector<CoverEntry> psi_cover = refine_to_radius(psi, target, budget.max_nodes);
    const int m = ps.count();
    std::vector<std::vector<CoverEntry>> cell_cover(static_cast<std::size_t>(m));
    for (const CoverEntry& e : psi_cover) {
        if (e.word.empty())
            throw std::invalid_argument("partition_cells: separated-system cover failed to refine");
        cell_cover[static_cast<std::size_t>(e.word.front())].push_back(e);
    }
    for (int j = 0; j < m; ++j)
        if (cell_cover[static_cast<std::size_t>(j)].empty())
            throw std::invalid_argument("partition_cells: empty cover for image " + ordinal(j));

    if (theta.pool.empty())
        throw std::invalid_argument("partition_cells: no exact sample points available");
    const Vec& q = theta.pool.front().point;

    const Rat near_threshold = delta.lo() / Rat(4); // genuine membership gives <= 2*(delta/8)
    const Rat far_threshold = delta.lo() / Rat(2);  // distinct cells are delta apart

    CellPartition out;
    out.cells.assign(static_cast<std::size_t>(m), {});
    const int n = th.count();
    for (int i = 0; i < n; ++i) {
        const Vec p = th.maps[static_cast<std::size_t>(i)].apply(q);
        int candidate = -1;
        bool candidate_near = false;
        bool ambiguous = false;
        for (int j = 0; j < m; ++j) {
            Rat lo_j, hi_j;
            bool first = true;
            for (const CoverEntry& e : cell_cover[static_cast<std::size_t>(j)]) {
                const Scalar d = dist(p, e.ball.center);
                const Rat lo_e = d.lo() - e.ball.radius.hi();
                const Rat hi_e = d.hi() + e.ball.radius.hi();
                if (first || lo_e < lo_j) lo_j = lo_e;
                if (first || hi_e < hi_j) hi_j = hi_e;
                first = false;
            }
            if (lo_j >= far_threshold) continue; // certifiably in a different cell
            if (candidate >= 0) {
                ambiguous = true;
                break;
            }
            candidate = j;
            candidate_near = hi_j <= near_threshold;
        }
        if (ambiguous)
            throw IncompatibleInputs("partition_cells: image " + ordinal(i) +
                                     " cannot be separated from two cells (the systems cannot "
                                     "share an attractor at this gap)");
        if (candidate < 0)
            throw IncompatibleInputs("partition_cells: image " + ordinal(i) +
                                     " meets no cell of the separated system");
        if (!candidate_near)
            throw IncompatibleInputs("partition_cells: image " + ordinal(i) +
                                     " is not certifiably inside cell " + ordinal(candidate));
        out.cells[static_cast<std::size_t>(candidate)].push_back(i);
    }

    for (int j = 0; j < m; ++j)
        if (out.cells[static_cast<std::size_t>(j)].empty())
            throw IncompatibleInputs("partition_cells: cell " + ordinal(j) +
                                     " receives no image (the union identity cannot hold)");

    // Union identity per cell at cover resolution: the theta sub-cover of
    // each cell and the psi-side cell cover must trace the same set.
    const std::vector<CoverEntry> theta_cover = refine_to_radius(theta, target, budget.max_nodes);
    std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < m; ++j)
        for (int i : out.cells[static_cast<std::size_t>(j)])
            cell_of[static_cast<std::size_t>(i)] = j;
    std::vector<std::vector<CoverEntry>> theta_cell_cover(static_cast<std::size_t>(m));
    for (const CoverEntry& e : theta_cover) {
        if (e.word.empty())
            throw std::invalid_argument("partition_cells: theta cover failed to refine");
        theta_cell_cover[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(
                             e.word.front())])]
            .push_back(e);
    }

    out.union_defect.reserve(static_cast<std::size_t>(m));
    out.defect_allowance.reserve(static_cast<std::size_t>(m));
    bool ok = true;
    for (int j = 0; j < m; ++j) {
        const auto& ca = theta_cell_cover[static_cast<std::size_t>(j)];
        const auto& cb = cell_cover[static_cast<std::size_t>(j)];
        Rat ra(0), rb(0);
        for (const auto& e : ca) ra = max(ra, e.ball.radius.hi());
        for (const auto& e : cb) rb = max(rb, e.ball.radius.hi());
        const Rat defect = max(directed_cover_bound(ca, cb, th.dim),
                               directed_cover_bound(cb, ca, th.dim));
        const Rat allowance = Rat(8) * (ra + rb);
        out.union_defect.push_back(Scalar::exact(defect));
        out.defect_allowance.push_back(Scalar::exact(allowance));
        if (!(defect <= allowance)) ok = false;
    }
    if (!ok)
        throw IncompatibleInputs(
            "partition_cells: per-cell union identity fails at cover resolution (the systems "
            "cannot share an attractor)");
    out.certified = true;
    return out;
}

IfsSystem quotient_ifs(const IfsSystem& theta, const IfsSystem& psi, int j,
                       const CellPartition& cells) {
    if (j < 0 || j >= psi.count())
        throw std::invalid_argument("quotient_ifs: cell index out of range");
    if (static_cast<std::size_t>(psi.count()) != cells.cells.size())
        throw std::invalid_argument("quotient_ifs: cell partition does not match the system");
    const auto& cell = cells.cells[static_cast<std::size_t>(j)];
    if (cell.empty())
        throw IncompatibleInputs("quotient_ifs: cell " + ordinal(j) +
                                 " is empty (incompatible inputs)");
    const Similitude& outer = psi.maps[static_cast<std::size_t>(j)];
    if (cmp(theta.max_ratio(), outer.ratio) != Cmp::less)
        throw std::invalid_argument(
            "quotient_ifs: theta ratios are not certifiably below the cell ratio");

    std::vector<Similitude> maps;
    std::vector<Word> labels;
    maps.reserve(cell.size());
    labels.reserve(cell.size());
    for (int i : cell) {
        maps.push_back(left_quotient(outer, theta.maps[static_cast<std::size_t>(i)]));
        labels.push_back(theta.labels[static_cast<std::size_t>(i)]);
    }
    const OscStatus osc = (osc_attributed(theta.osc) && osc_attributed(psi.osc))
                              ? OscStatus::inherited
                              : OscStatus::unknown;
    return make_system(theta.dim, theta.mode, std::move(maps), osc, std::move(labels));
}

NormalizedSystem normalize_into_band(const IfsSystem& phi, const IfsSystem& gamma,
                                     const BandParams& band, std::uint64_t map_budget) {
    if (!phi.homogeneous)
        throw std::invalid_argument("normalize_into_band: reference system is not homogeneous");
    if (!gamma.homogeneous)
        throw std::invalid_argument("normalize_into_band: quotient system is not homogeneous");
    const Scalar rho = phi.common_ratio;
    const Scalar rho_g = gamma.common_ratio;
    if (cmp(rho_g, band.band_hi) != Cmp::greater)
        throw IncompatibleInputs(
            "normalize_into_band: quotient ratio is not certifiably above the band");

    Scalar value = rho_g;
    for (int k = 1; k <= kScanCap; ++k) {
        value = value * rho;
        const Cmp upper = cmp(value, band.band_hi);
        if (upper == Cmp::unknown)
            throw std::invalid_argument(
                "normalize_into_band: band membership undecided at current precision");
        if (upper != Cmp::less) continue;
        const Cmp lower = cmp(value, band.band_lo);
        if (lower == Cmp::unknown)
            throw std::invalid_argument(
                "normalize_into_band: band membership undecided at current precision");
        if (lower == Cmp::less)
            throw IncompatibleInputs("normalize_into_band: ratio skipped past the band");
        NormalizedSystem out;
        out.k = k;
        out.ratio = value;
        out.system = ifs_compose(ifs_power(phi, k, map_budget), gamma);
        return out;
    }
    throw std::invalid_argument("normalize_into_band: exponent scan cap exceeded");
}

namespace {

std::vector<std::vector<int>> restrict_partition(const std::vector<std::vector<int>>& comps,
                                                 const std::vector<int>& cell) {
    const std::set<int> members(cell.begin(), cell.end());
    std::vector<std::vector<int>> out;
    for (const auto& comp : comps) {
        std::vector<int> kept;
        for (int i : comp)
            if (members.count(i)) kept.push_back(i);
        if (!kept.empty()) {
            std::sort(kept.begin(), kept.end());
            out.push_back(std::move(kept));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

DecompositionReport decomposition_check(const IfsSystem& theta, const IfsSystem& psi,
                                        const CellPartition& cells,
                                        const std::vector<IfsSystem>& quotients,
                                        const Budget& budget) {
    if (quotients.size() != cells.cells.size())
        throw std::invalid_argument("decomposition_check: one quotient per cell required");

    DecompositionReport rep;

    const AttractorContext ctx_theta = make_context(theta);
    const ComponentPartition part_theta = components(adjacency_graph(ctx_theta, budget));
    rep.gamma_theta = characteristic_vector(theta, part_theta);
    rep.provisional = part_theta.provisional;

    // (a) no component crosses cells.
    std::map<int, int> cell_of;
    for (std::size_t j = 0; j < cells.cells.size(); ++j)
        for (int i : cells.cells[j]) cell_of[i] = static_cast<int>(j);
    rep.components_within_cells = true;
    for (const auto& comp : part_theta.components) {
        for (std::size_t t = 1; t < comp.size(); ++t)
            if (cell_of.at(comp[t]) != cell_of.at(comp[0])) rep.components_within_cells = false;
    }

    // (b) per cell, theta-components coincide with quotient components; the
    // quotient indexes its maps by position within the (sorted) cell.
    rep.quotient_components_match = true;
    for (std::size_t j = 0; j < quotients.size(); ++j) {
        const auto& cell = cells.cells[j];
        const AttractorContext ctx_q = make_context(quotients[j]);
        const ComponentPartition part_q = components(adjacency_graph(ctx_q, budget));
        rep.provisional = rep.provisional || part_q.provisional;

        std::vector<std::vector<int>> via_quotient;
        for (const auto& comp : part_q.components) {
            std::vector<int> back;
            for (int pos : comp) back.push_back(cell[static_cast<std::size_t>(pos)]);
            std::sort(back.begin(), back.end());
            via_quotient.push_back(std::move(back));
        }
        std::sort(via_quotient.begin(), via_quotient.end());
        if (via_quotient != restrict_partition(part_theta.components, cell))
            rep.quotient_components_match = false;

        rep.gamma_quotients.push_back(characteristic_vector(quotients[j], part_q));
        rep.coefficients.push_back(
            psi.sdim.rho_pow_s(psi.maps[j].ratio));
    }

    // (c) the convex-combination identity.
    const CharVec combined = linear_combine(rep.coefficients, rep.gamma_quotients);
    rep.residual = charvec_sub(rep.gamma_theta, combined);
    rep.residual_zero = rep.residual.entries.empty() && rep.residual.exact;
    rep.residual_contains_zero = true;
    for (const auto& [n, v] : rep.residual.entries)
        if (v.lo().sign() > 0 || v.hi().sign() < 0) rep.residual_contains_zero = false;
    return rep;
}

std::string harness_status_str(HarnessStatus s) {
    switch (s) {
    case HarnessStatus::contradiction_demonstrated: return "contradiction-demonstrated";
    case HarnessStatus::trivially_consistent: return "trivially-consistent";
    case HarnessStatus::inputs_incompatible: return "inputs-incompatible";
    case HarnessStatus::undecided: return "undecided";
    }
    return "?";
}

namespace {

const char* kMaximalityNote =
    "The per-map cell assignment is used without a maximal-system search over the family of "
    "homogeneous generating systems in the band; the report checks every link of the "
    "contradiction chain on the chosen power but cannot reproduce the maximality step.";

// Attempt to rewrite a similitude in exact orthonormal coordinates of an
// affine subspace: x = p + B y with B orthonormal columns.  Returns nothing
// when the map does not preserve the subspace or exactness is unavailable.
std::optional<Similitude> conjugate_into(const Similitude& f, const Vec& p,
                                         const std::vector<Vec>& basis, Mode mode) {
    const int h = static_cast<int>(basis.size());
    const int d = static_cast<int>(p.size());
    // Q = B^T R B, t = B^T (f(p) - p); well-defined iff f(p) - p and each
    // R b_l stay inside span(B).
    const Vec fp = f.apply(p);
    Vec rel(fp);
    for (int a = 0; a < d; ++a) rel[static_cast<std::size_t>(a)] =
        fp[static_cast<std::size_t>(a)] - p[static_cast<std::size_t>(a)];

    auto in_span = [&](const Vec& v, Vec& coords) -> bool {
        coords.assign(static_cast<std::size_t>(h), Scalar::exact(Rat(0)));
        Vec resid = v;
        for (int l = 0; l < h; ++l) {
            const Scalar c = dot(v, basis[static_cast<std::size_t>(l)]);
            coords[static_cast<std::size_t>(l)] = c;
            for (int a = 0; a < d; ++a)
                resid[static_cast<std::size_t>(a)] =
                    resid[static_cast<std::size_t>(a)] -
                    c * basis[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)];
        }
        for (int a = 0; a < d; ++a)
            if (!resid[static_cast<std::size_t>(a)].is_exact_zero()) return false;
        return true;
    };

    Vec shift;
    if (!in_span(rel, shift)) return std::nullopt;

    Mat q(static_cast<std::size_t>(h), Vec(static_cast<std::size_t>(h), Scalar::exact(Rat(0))));
    for (int l = 0; l < h; ++l) {
        const Vec rb = mat_vec(f.rot.m, basis[static_cast<std::size_t>(l)]);
        Vec col;
        if (!in_span(rb, col)) return std::nullopt;
        for (int k = 0; k < h; ++k) q[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
            col[static_cast<std::size_t>(k)];
    }
    try {
        return make_similitude(f.ratio, make_orthogonal(q, mode), shift);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<IfsSystem> reduce_to_hull(const IfsSystem& sys, const AffineHull& hull) {
    if (hull.dimension < 1) return std::nullopt;
    // Orthonormalize: possible exactly only when every squared norm is a
    // perfect square.
    std::vector<Vec> basis;
    for (const Vec& dir : hull.directions) {
        const Scalar n2 = norm_sq(dir);
        if (!n2.is_exact()) return std::nullopt;
        const auto root = n2.value().sqrt_exact();
        if (!root) return std::nullopt;
        Vec unit(dir);
        for (auto& c : unit) c = c / Scalar::exact(*root);
        basis.push_back(std::move(unit));
    }
    std::vector<Similitude> maps;
    for (const Similitude& f : sys.maps) {
        auto g = conjugate_into(f, hull.base, basis, sys.mode);
        if (!g) return std::nullopt;
        maps.push_back(std::move(*g));
    }
    try {
        return make_system(hull.dimension, sys.mode, std::move(maps), sys.osc, sys.labels);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

} // namespace

HarnessReport contradiction_trace(const IfsSystem& phi_in, const IfsSystem& psi_in,
                                  const Budget& budget, const HarnessOptions& opts) {
    HarnessReport rep;
    rep.note = kMaximalityNote;

    if (phi_in.dim != psi_in.dim)
        throw std::invalid_argument("contradiction_trace: ambient dimensions differ");

    auto incompatible = [&](std::string why) {
        rep.status = HarnessStatus::inputs_incompatible;
        rep.reason = std::move(why);
        return rep;
    };
    auto undecided = [&](std::string why) {
        rep.status = HarnessStatus::undecided;
        rep.reason = std::move(why);
        return rep;
    };

    if (!phi_in.homogeneous)
        return incompatible("the left system is not homogeneous");
    if (!osc_attributed(phi_in.osc))
        return incompatible("open set condition not attributed for the left system");

    // Degenerate-hull reduction: when the attractor spans a proper affine
    // subspace and both systems conjugate exactly into orthonormal hull
    // coordinates, continue there; otherwise continue in ambient coordinates.
    IfsSystem phi = phi_in;
    IfsSystem psi = psi_in;
    {
        const AttractorContext probe = make_context(phi_in);
        const AffineHull hull = affine_hull(probe, 2);
        if (hull.dimension >= 1 && hull.dimension < phi_in.dim) {
            auto rp = reduce_to_hull(phi_in, hull);
            auto rq = rp ? reduce_to_hull(psi_in, hull) : std::nullopt;
            if (rp && rq) {
                phi = std::move(*rp);
                psi = std::move(*rq);
                rep.note = std::string(kMaximalityNote) +
                           " Analysis performed in affine-hull coordinates (dimension " +
                           std::to_string(hull.dimension) + ").";
            } else {
                rep.note = std::string(kMaximalityNote) +
                           " The attractor spans a proper affine subspace but no exact "
                           "orthonormal reduction was available; analysis stays in ambient "
                           "coordinates.";
            }
        }
    }

    const AttractorContext ctx_phi = make_context(phi);
    const SscResult ssc_phi = check_ssc(ctx_phi, budget);
    if (ssc_phi.status == SscResult::Status::certified_ssc)
        return incompatible("the left system satisfies strong separation; the argument needs a "
                            "non-separated left system");
    if (ssc_phi.status == SscResult::Status::undecided)
        return undecided("strong-separation status of the left system undecided at this budget");

    const AttractorContext ctx_psi = make_context(psi);
    const SscResult ssc_psi = check_ssc(ctx_psi, budget);
    if (ssc_psi.status == SscResult::Status::certified_not_ssc)
        return incompatible("the right system is not strongly separated");
    if (ssc_psi.status == SscResult::Status::undecided)
        return undecided("strong-separation status of the right system undecided at this budget");

    const Scalar diam_hi = diameter_bounds(ctx_phi, 3).second;
    if (!opts.assume_same_attractor) {
        const Rat threshold = opts.attractor_tolerance * diam_hi.hi();
        const AttractorEvidence ev = attractor_evidence(ctx_phi, ctx_psi, threshold,
                                                        opts.hausdorff_depth, budget.max_nodes);
        rep.attractor_evidence = ev.bound;
        if (!ev.within) {
            const std::string detail = "same-attractor evidence insufficient: cross Hausdorff "
                                       "bound " + ev.bound.str() + " stays above tolerance " +
                                       threshold.str();
            if (ev.budget_stopped)
                return undecided(detail + " (refinement stopped by the budget)");
            return incompatible(detail + " at the depth cap");
        }
    }

    try {
        // Iterate the separated system until all its ratios sit below rho.
        const Scalar rho = phi.common_ratio;
        IfsSystem psi_pow = psi;
        rep.psi_power = 1;
        while (cmp(psi_pow.max_ratio(), rho) != Cmp::less) {
            rep.psi_power += 1;
            if (rep.psi_power > opts.psi_power_cap)
                return undecided("could not iterate the separated system below the reference "
                                 "ratio within the power cap");
            psi_pow = ifs_power(psi, rep.psi_power, budget.max_nodes);
        }
        const AttractorContext ctx_psi_pow =
            rep.psi_power == 1 ? make_context(psi) : make_context(psi_pow);

        rep.delta = min_gap(ctx_psi_pow, budget);
        rep.band = choose_band(rho, psi_pow, rep.delta, diam_hi);
        rep.theta_power = band_exponent(rho, rep.band);

        const IfsSystem theta = ifs_power(phi, rep.theta_power, budget.max_nodes);
        const AttractorContext ctx_theta = make_context(theta);
        rep.cells = partition_cells(ctx_theta, ctx_psi_pow, rep.delta, budget);

        std::vector<IfsSystem> quotients;
        quotients.reserve(rep.cells.cells.size());
        for (int j = 0; j < psi_pow.count(); ++j)
            quotients.push_back(quotient_ifs(theta, psi_pow, j, rep.cells));

        rep.decomposition = decomposition_check(theta, psi_pow, rep.cells, quotients, budget);
        rep.decomposition_ran = true;

        bool any_undecided = rep.decomposition.provisional;
        bool all_versus_le = true;
        bool any_strict = false;
        const CharVec gamma_theta = rep.decomposition.gamma_theta;
        for (std::size_t j = 0; j < quotients.size(); ++j) {
            CellTrace trace;
            trace.j = static_cast<int>(j);
            trace.members = rep.cells.cells[j];
            trace.quotient_ratio = quotients[j].common_ratio;
            const NormalizedSystem norm =
                normalize_into_band(phi, quotients[j], rep.band, budget.max_nodes);
            trace.k = norm.k;

            const AttractorContext ctx_norm = make_context(norm.system);
            const ComponentPartition part_norm = components(adjacency_graph(ctx_norm, budget));
            const CharVec gamma_norm = characteristic_vector(norm.system, part_norm);
            any_undecided = any_undecided || part_norm.provisional;

            trace.step = compare(rep.decomposition.gamma_quotients[j], gamma_norm);
            trace.versus_theta = compare(gamma_norm, gamma_theta);
            if (trace.step.kind == OrderKind::less) any_strict = true;
            if (trace.step.kind == OrderKind::incomparable ||
                trace.versus_theta.kind == OrderKind::incomparable)
                any_undecided = true;
            if (!(trace.versus_theta.kind == OrderKind::less ||
                  trace.versus_theta.kind == OrderKind::equal))
                all_versus_le = false;
            rep.cell_traces.push_back(std::move(trace));
        }

        if (!rep.decomposition.residual_contains_zero)
            return incompatible("decomposition residual certifiably nonzero");
        if (!rep.decomposition.components_within_cells ||
            !rep.decomposition.quotient_components_match) {
            if (rep.decomposition.provisional)
                return undecided("component structure across cells is provisional");
            return incompatible("component structure does not respect the cells");
        }
        if (any_undecided || !rep.decomposition.residual_zero)
            return undecided("a pipeline stage is provisional or the decomposition residual is "
                             "only enclosed, not exact");

        if (all_versus_le && any_strict) {
            rep.status = HarnessStatus::contradiction_demonstrated;
            rep.reason = "every normalized cell system compares at or below the power system "
                         "while some strict increase is certified; the averaged identity is "
                         "violated";
        } else {
            rep.status = HarnessStatus::trivially_consistent;
            rep.reason = "all stages certified; no contradiction arises because some normalized "
                         "cell system compares strictly above the power system";
        }
        return rep;
    } catch (const IncompatibleInputs& e) {
        return incompatible(e.what());
    } catch (const BudgetError& e) {
        return undecided(std::string("budget exhausted: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return undecided(std::string("stage could not certify: ") + e.what());
    }
}

PowerChain power_chain(const IfsSystem& phi, int K, const Budget& budget,
                       std::uint64_t map_budget) {
    if (K < 1) throw std::invalid_argument("power_chain: K must be at least 1");
    if (!osc_attributed(phi.osc))
        throw std::invalid_argument("power_chain: open set condition not attributed");

    const AttractorContext ctx = make_context(phi);
    const SscResult ssc = check_ssc(ctx, budget);
    if (ssc.status == SscResult::Status::certified_ssc)
        throw std::invalid_argument("power_chain: the system is strongly separated; powers keep "
                                    "the trivial vector");
    if (ssc.status == SscResult::Status::undecided)
        throw std::invalid_argument(
            "power_chain: strong-separation status undecided at this budget");

    PowerChain out;
    for (int k = 1; k <= K; ++k) {
        const IfsSystem sys_k = k == 1 ? phi : ifs_power(phi, k, map_budget);
        const AttractorContext ctx_k = make_context(sys_k);
        const ComponentPartition part = components(adjacency_graph(ctx_k, budget));
        out.provisional = out.provisional || part.provisional;
        out.gammas.push_back(characteristic_vector(sys_k, part));
        if (k > 1)
            out.steps.push_back(compare(out.gammas[static_cast<std::size_t>(k - 2)],
                                        out.gammas[static_cast<std::size_t>(k - 1)]));
    }
    out.all_strict = !out.steps.empty();
    for (const OrderResult& s : out.steps)
        if (s.kind != OrderKind::less) out.all_strict = false;
    if (K == 1) out.all_strict = true;
    return out;
}

} // namespace ifsx
