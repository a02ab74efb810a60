#pragma once

#include "ifsx/separation.hpp"

#include <map>
#include <string>
#include <vector>

namespace ifsx {

// Characteristic vector of a system with respect to a component partition:
// entry n carries the total dimension-weighted mass sum_{i in n-components}
// ratio_i^s.  Entries are exact rationals on the homogeneous path (count/N)
// and certified enclosures otherwise; absent indices are exact zero.
struct CharVec {
    std::map<int, Scalar> entries; // n >= 1 -> mass; exact zeros dropped
    bool exact = true;             // every entry exact
    bool provisional = false;      // built from a provisional partition

    int max_index() const { return entries.empty() ? 0 : entries.rbegin()->first; }
    Scalar at(int n) const {
        const auto it = entries.find(n);
        return it == entries.end() ? Scalar::exact(Rat(0)) : it->second;
    }
    std::string str() const;
};

CharVec characteristic_vector(const IfsSystem& sys, const ComponentPartition& partition);

// The total order on characteristic vectors: the LARGEST index at which the
// vectors differ decides (x ≺ y iff x_m < y_m at that index m).
enum class OrderKind { less, equal, greater, incomparable };

struct OrderResult {
    OrderKind kind = OrderKind::equal;
    int index = 0;  // deciding index (0 when equal)
    Scalar gap;     // certified |difference| enclosure at the deciding index
};

std::string order_kind_str(OrderKind k);

// Exact vectors always compare (the order is total); enclosure entries can
// yield `incomparable` when an entry overlap cannot be certified either way.
OrderResult compare(const CharVec& x, const CharVec& y);

// sum_k coeffs[k] · vecs[k].  The coefficients must be certifiably
// nonnegative and must not certifiably differ from unit sum (exactness of
// the result records whether everything was exact).
CharVec linear_combine(const std::vector<Scalar>& coeffs, const std::vector<CharVec>& vecs);

// Entrywise difference x - y (used for decomposition residuals; may carry
// negative entries, unlike a characteristic vector).
CharVec charvec_sub(const CharVec& x, const CharVec& y);

// Monotonicity of gamma under composition: gamma(Phi ∘ Psi) ≻ gamma(Psi)
// whenever Phi is OSC-attributed but not strongly separated, both systems
// share the attractor.  The report carries the certified comparison and the
// merged components of the composite system that witness the strict step.
struct MonotonicityOptions {
    bool assume_same_attractor = false;
    int hausdorff_depth = 12; // escalation cap for same-attractor evidence
    Rat attractor_tolerance = Rat(1, 1000000); // fraction of the diameter
};

struct MonotonicityReport {
    bool preconditions_ok = false;
    std::string failure; // first failed gate, empty when ok
    Scalar attractor_evidence;
    CharVec gamma_psi, gamma_composite;
    OrderResult order;
    bool strict_increase = false;
    // Components of the composite system spanning at least two distinct
    // first-factor maps, shown via provenance labels.
    std::vector<std::vector<Word>> merged_components;
    bool provisional = false;
};

MonotonicityReport verify_monotonicity(const IfsSystem& phi, const IfsSystem& psi,
                                       const Budget& budget = {},
                                       const MonotonicityOptions& opts = {});

} // namespace ifsx
