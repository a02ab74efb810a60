#pragma once

#include "ifsx/attractor.hpp"
#include "ifsx/budget.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ifsx {

// Symbolic address of an exact attractor point: phi_preperiod(fix(phi_period)).
struct PeriodicAddress {
    Word preperiod;
    Word period;
};

// Certified two-sided bounds on dist(X, Y) for unions of cylinder sets, plus
// an exact witness when the distance is certified to be zero.
struct DistanceBounds {
    Scalar lower;            // certified: dist >= lower
    Scalar upper;            // certified: dist <= upper (from exact sample pairs)
    bool intersect = false;  // an exact common point was found
    std::optional<PeriodicAddress> witness_a, witness_b;
    Vec witness_point;
    std::uint64_t nodes_expanded = 0;
    int depth_reached = 0;
    bool budget_exhausted = false;
};

// Certified bounds on dist(∪_{w∈words_a} phi_w(E_A), ∪_{w∈words_b} psi_w(E_B))
// by best-first branch-and-bound on cylinder ball pairs: smallest certified
// gap first, lexicographic (word_a, word_b) tie-break, expanding the side
// with the larger ball radius (ties expand side A; a side at the depth cap
// yields to the other).  Upper bounds and witnesses come from exact periodic
// sample points pushed through the cylinder words.
DistanceBounds set_distance(const AttractorContext& a, const std::vector<Word>& words_a,
                            const AttractorContext& b, const std::vector<Word>& words_b,
                            const Budget& budget = {});

// Same-system convenience overload.
DistanceBounds set_distance(const AttractorContext& ctx, const std::vector<Word>& words_a,
                            const std::vector<Word>& words_b, const Budget& budget = {});

} // namespace ifsx
