#pragma once

// Independent test oracles, deliberately built on different machinery than
// the production code paths they cross-check.

#include "ifsx/attractor.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ifsx::testing {

// Exact hull interval of a one-dimensional exact-mode attractor piece
// phi_w(E): the image of the (exactly tightened) hull of E.
struct Interval {
    Rat lo, hi;
};

inline Interval piece_hull(const IfsSystem& sys, int i) {
    const auto hull = exact_hull_1d(sys);
    if (!hull) throw std::runtime_error("oracle: no exact 1d hull");
    const Similitude& f = sys.maps[static_cast<std::size_t>(i)];
    const Rat a = f.ratio.value() * f.rot.m[0][0].value();
    const Rat b = f.shift[0].value();
    const Rat x = a * hull->first + b;
    const Rat y = a * hull->second + b;
    return x <= y ? Interval{x, y} : Interval{y, x};
}

// Adjacency oracle for 1-d exact systems whose piece hulls overlap in at
// most a point: hull intervals intersect iff the pieces do (a one-point
// hull intersection is an endpoint of both hulls, and hull endpoints belong
// to the pieces).  Returns nothing when the applicability condition fails.
struct HullAdjacency {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> components; // sorted, by smallest member
};

inline std::optional<HullAdjacency> hull_adjacency_1d(const IfsSystem& sys) {
    const int n = sys.count();
    std::vector<Interval> hulls;
    hulls.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) hulls.push_back(piece_hull(sys, i));

    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;

    HullAdjacency out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Rat lo = max(hulls[static_cast<std::size_t>(i)].lo,
                               hulls[static_cast<std::size_t>(j)].lo);
            const Rat hi = min(hulls[static_cast<std::size_t>(i)].hi,
                               hulls[static_cast<std::size_t>(j)].hi);
            if (lo < hi) return std::nullopt; // overlap in a segment: inapplicable
            if (lo == hi) {
                out.edges.emplace_back(i, j);
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
            }
        }
    }

    // Boolean-matrix transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> comp;
        for (int j = 0; j < n; ++j)
            if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                comp.push_back(j);
                seen[static_cast<std::size_t>(j)] = true;
            }
        out.components.push_back(std::move(comp));
    }
    return out;
}

// Double-precision bisection oracle for the similarity dimension:
// sum of ratios^s = 1.
inline double dimension_oracle(const std::vector<double>& ratios) {
    auto f = [&](double s) {
        double acc = 0.0;
        for (double r : ratios) acc += std::pow(r, s);
        return acc - 1.0;
    };
    double lo = 0.0, hi = 64.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace ifsx::testing
