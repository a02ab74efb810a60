#pragma once

#include "ifsx/similitude.hpp"
#include "ifsx/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ifsx {

// Whether the open set condition is known to hold for a system, and how that
// knowledge arose.  "inherited" marks systems derived (composition, power,
// quotient) from attributed parents.
enum class OscStatus { unknown, declared, witnessed, inherited };

std::string osc_status_str(OscStatus s);
bool osc_attributed(OscStatus s);

// Similarity dimension data for a system.  For a homogeneous system the
// identity ratio^s = 1/N is carried symbolically, so per-map mass ratio^s is
// the exact rational 1/N regardless of whether s itself is rational.
struct SimilarityDimension {
    bool homogeneous = false;
    int n_maps = 0;
    Rat common_ratio = Rat(0);          // meaningful when homogeneous (exact mode)
    std::optional<Rat> exact_value;     // s itself, when rational (e.g. 1/2)
    Scalar enclosure;                   // always present; width <= requested

    // Certified value of r^s for a map ratio r of THIS system.  Exact 1/N on
    // the homogeneous path; enclosure otherwise.
    Scalar rho_pow_s(const Scalar& r) const;
};

struct IfsSystem {
    int dim = 1;
    Mode mode = Mode::exact;
    std::vector<Similitude> maps;
    // Provenance labels: for composed/power systems, the word of original
    // indices each map came from; defaults to single-symbol words.
    std::vector<Word> labels;
    OscStatus osc = OscStatus::unknown;

    bool homogeneous = false;
    Scalar common_ratio;   // hull of the ratios when homogeneous
    SimilarityDimension sdim;

    int count() const { return static_cast<int>(maps.size()); }
    // Largest map ratio (upper endpoints); the contraction factor used by
    // covers and invariant balls.
    Scalar max_ratio() const;
    Scalar min_ratio() const;
};

struct SystemOptions {
    // Target width for the dimension enclosure.
    Rat dimension_width = Rat(1) / Rat(1000000000) / Rat(1000);
};

// Validates N >= 2, per-map dimension agreement, contraction ratios, and
// computes homogeneity plus the dimension data.  Labels default to
// {(1)},...,{(N)}.
IfsSystem make_system(int dim, Mode mode, std::vector<Similitude> maps,
                      OscStatus osc = OscStatus::unknown, std::vector<Word> labels = {},
                      const SystemOptions& opts = {});

// phi_w = phi_{w_1} ∘ ... ∘ phi_{w_k}; the word must be nonempty and in range.
Similitude cylinder_map(const IfsSystem& sys, const Word& w);

// Product of the ratios along a word (exact 1 for the empty word).
Scalar word_ratio(const IfsSystem& sys, const Word& w);

// {phi_i ∘ psi_j} in lexicographic (i, j) order, labels concatenated.
// OSC status is "inherited" when both factors are attributed.
IfsSystem ifs_compose(const IfsSystem& a, const IfsSystem& b);

// k-fold composition of the system with itself, k >= 1.  Throws BudgetError
// when the resulting map count would exceed `map_budget`.
IfsSystem ifs_power(const IfsSystem& a, int k, std::uint64_t map_budget = 1u << 20);

} // namespace ifsx
