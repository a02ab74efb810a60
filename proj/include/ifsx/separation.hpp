#pragma once

#include "ifsx/distance.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ifsx {

// Three-valued certified verdict on phi_i(E) ∩ phi_j(E).
struct CertifiedDisjoint {
    Scalar gap; // dist >= gap > 0
};
struct CertifiedIntersect {
    Vec witness;
    PeriodicAddress address_a, address_b;
};
struct Undecided {
    Scalar upper; // best known upper bound on the distance
    std::uint64_t nodes_expanded = 0;
};
using IntersectionVerdict = std::variant<CertifiedDisjoint, CertifiedIntersect, Undecided>;

bool is_disjoint(const IntersectionVerdict& v);
bool is_intersect(const IntersectionVerdict& v);
bool is_undecided(const IntersectionVerdict& v);
std::string verdict_str(const IntersectionVerdict& v);

IntersectionVerdict decide_intersection(const AttractorContext& ctx, int i, int j,
                                        const Budget& budget = {});

// All pairwise verdicts i < j.
struct AdjacencyGraph {
    int n = 0;
    // verdicts[k] corresponds to pairs[k]; pairs are (i, j) 0-based, i < j,
    // lexicographic.
    std::vector<std::pair<int, int>> pairs;
    std::vector<IntersectionVerdict> verdicts;
    std::vector<std::pair<int, int>> edges;     // certified intersections
    std::vector<std::pair<int, int>> undecided; // neither verdict certified

    bool fully_certified() const { return undecided.empty(); }
};

AdjacencyGraph adjacency_graph(const AttractorContext& ctx, const Budget& budget = {});

// Connected components of the certified-edge graph, each sorted, listed by
// smallest member.  Provisional when the graph has undecided pairs (the
// partition could only coarsen, never split, if they resolved to edges).
struct ComponentPartition {
    std::vector<std::vector<int>> components;
    bool provisional = false;
};

ComponentPartition components(const AdjacencyGraph& g);

// Certified checks of the two defining properties of the component
// partition: (i) distinct components have disjoint set-unions (positive
// certified gap), (ii) each component is connected via certified edges.
struct ComponentPropertyReport {
    struct PerComponent {
        int index = 0;
        Cmp separation = Cmp::unknown; // greater = certified positive gap
        Scalar gap;
        bool connected = false;
    };
    std::vector<PerComponent> rows;
    bool all_pass = false;
};

ComponentPropertyReport verify_component_properties(const AttractorContext& ctx,
                                                    const ComponentPartition& partition,
                                                    const Budget& budget = {});

// Strong separation: all pairwise images certifiably disjoint.
struct SscResult {
    enum class Status { certified_ssc, certified_not_ssc, undecided } status;
    Scalar delta; // certified lower bound on the minimal pairwise gap (ssc case)
    std::optional<std::pair<int, int>> witness_pair; // touching pair (not-ssc case)
    std::optional<IntersectionVerdict> witness_verdict;
    std::vector<std::pair<int, int>> undecided_pairs;
};

SscResult check_ssc(const AttractorContext& ctx, const Budget& budget = {});

// Axis-aligned open box (lo < hi componentwise).
struct BoxU {
    std::vector<Rat> lo, hi;
};

// Open-set-condition witness check for a finite union of open boxes U:
// phi_i(U) ⊆ U for all i and the phi_i(U) pairwise disjoint.  Requires every
// orthogonal part to be a signed permutation (box images stay boxes); throws
// std::invalid_argument otherwise.
struct OscCheck {
    bool verified = false;
    std::string detail;
};

OscCheck check_osc_witness(const IfsSystem& sys, const std::vector<BoxU>& boxes);

// Under certified strong separation with gap delta, the open
// delta/3-neighborhood of the attractor is an OSC witness.
struct OscFromSsc {
    Scalar epsilon;
    std::string description;
};

OscFromSsc osc_witness_from_ssc(const AttractorContext& ctx, const Scalar& delta);

} // namespace ifsx
