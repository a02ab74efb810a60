#pragma once

#include "ifsx/budget.hpp"
#include "ifsx/system.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ifsx {

struct Ball {
    Vec center;
    Scalar radius; // certified upper endpoint is the operative bound
};

// A ball B with phi_i(B) ⊆ B for every map: center at the first map's fixed
// point, radius max_i |phi_i(c) - c| / (1 - rho_max) (computed with upper
// endpoints, so the containment is certified).
Ball invariant_ball(const IfsSystem& sys);

// Exact convex hull [a, b] of the attractor for one-dimensional exact-mode
// systems: iterate the endpoint map until the attaining (map, endpoint)
// pattern stabilizes, solve the linear system exactly, and verify invariance
// T([a,b]) = [a,b] exactly.  nullopt when not applicable or not stabilized.
std::optional<std::pair<Rat, Rat>> exact_hull_1d(const IfsSystem& sys);

// Tightest available certified enclosure of the attractor: the exact hull as
// a ball in dimension 1 (exact mode), otherwise the invariant ball.
Ball root_enclosure(const IfsSystem& sys);

// An exact point of the attractor with its symbolic address
// phi_preperiod(fix(phi_period)).
struct PeriodicSample {
    Word preperiod;
    Word period;
    Vec point;
};

// Per-system analysis state shared by the set-distance and separation
// machinery: the root enclosure plus a pool of exact periodic points used as
// witness candidates and lower-bound samples.
struct AttractorContext {
    const IfsSystem* sys = nullptr;
    Ball root;
    std::vector<PeriodicSample> pool;
};

AttractorContext make_context(const IfsSystem& sys);
// The context keeps a pointer to the system, so a temporary would dangle.
AttractorContext make_context(IfsSystem&&) = delete;

struct CoverEntry {
    Word word;
    Ball ball;
};

struct CylinderCover {
    int depth = 0;           // uniform word length (refine_cover)
    std::vector<CoverEntry> entries;
    Scalar max_radius;
};

// All N^depth cylinder balls at the given word length, lexicographic order.
// Throws BudgetError when N^depth exceeds the budget.
CylinderCover refine_cover(const AttractorContext& ctx, int depth,
                           std::uint64_t budget = 1'000'000);

// Adaptive analogue: expand words until every ball radius is <= target.
// Word lengths vary for non-homogeneous systems.  `budget` caps the leaf
// count.
std::vector<CoverEntry> refine_to_radius(const AttractorContext& ctx, const Rat& target,
                                         std::uint64_t budget = 1'000'000);

// phi_u(fix(phi_w)): exact attractor point addressed by a preperiod u (may be
// empty) and a nonempty period w.
Vec periodic_point(const IfsSystem& sys, const Word& u, const Word& w);

// Certified [lower, upper] bounds on diam(E).  Lower from exact sample
// points, upper from a cover bounding box.
std::pair<Scalar, Scalar> diameter_bounds(const AttractorContext& ctx, int depth);

// Certified upper bound on the Hausdorff distance between the two attractors.
// Both sides are refined to the matched resolution rho_ref^depth (rho_ref =
// the larger of the two max-ratios), which keeps covers of a system and its
// composition powers aligned.
Scalar hausdorff_distance_bound(const AttractorContext& a, const AttractorContext& b,
                                int depth, std::uint64_t budget = 1'000'000);

// Certified upper bound on sup over the set enclosed by `a` of the distance
// to the set enclosed by `b`, for explicit ball lists in which every ball
// meets its underlying set: max_a [r_a + min_b (dist(c_a, c_b).hi + r_b)].
Rat directed_cover_bound(const std::vector<CoverEntry>& a, const std::vector<CoverEntry>& b,
                         int dim);

// Same-attractor evidence by escalating depth: Hausdorff bounds are computed
// at increasing depth until one clears `threshold`, `depth_cap` is reached,
// or the per-cover leaf budget stops refinement.  The best bound reached is
// reported either way; `within` says whether it cleared the threshold.  In
// dimension >= 2 the per-side cover budget is clamped hard (the directed
// bound is quadratic there), so thresholds much below the reachable
// resolution end in `budget_stopped` rather than a long stall.
struct AttractorEvidence {
    Scalar bound;
    bool within = false;
    int depth_used = 0;
    bool budget_stopped = false;
};

AttractorEvidence attractor_evidence(const AttractorContext& a, const AttractorContext& b,
                                     const Rat& threshold, int depth_cap = 12,
                                     std::uint64_t budget = 1'000'000);

// Affine hull of the attractor, reported as a base point plus an orthogonal
// spanning set (exact Gram-Schmidt; directions are orthogonal but in general
// not unit vectors, since rational unit normalization only exists when the
// squared norm is a perfect square).  The dimension is a certified lower
// bound, exact in exact mode for the sampled point set.
struct AffineHull {
    Vec base;
    std::vector<Vec> directions;
    int dimension = 0;
};

AffineHull affine_hull(const AttractorContext& ctx, int depth);

} // namespace ifsx
