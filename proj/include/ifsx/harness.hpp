#pragma once

#include "ifsx/charvec.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ifsx {

// Raised by pipeline stages when the two inputs cannot share an attractor
// (a map's image lands in no cell, a quotient ratio sits below the band,
// an empty cell appears).  The pipeline driver converts it into the
// `inputs_incompatible` report status.
struct IncompatibleInputs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certified lower/upper enclosure of the minimal pairwise image gap
// delta = min_{j != j'} dist(psi_j(E), psi_{j'}(E)).  Requires every pair to
// be certified disjoint (strong separation); throws std::invalid_argument
// otherwise.
Scalar min_gap(const AttractorContext& ctx, const Budget& budget = {});

// Band parameters for a homogeneous reference ratio rho: the smallest ell
// with rho^ell < min_j r_j, the maximal admissible eps = rho^ell * delta.lo /
// diam.hi, and the right-open band [rho*eps, eps).
struct BandParams {
    int ell = 0;
    Scalar eps;
    Scalar band_lo; // rho * eps
    Scalar band_hi; // eps (excluded)
};

// Requires every ratio of `psi` to be certifiably below `rho` (iterate `psi`
// first if needed) and a certifiably positive delta.
BandParams choose_band(const Scalar& rho, const IfsSystem& psi, const Scalar& delta,
                       const Scalar& diam_upper);

// Partition of theta's index set into cells by the psi-image each small map
// lands in: cells[j] lists the theta indices i with theta_i(E) inside
// psi_j(E), certified by exact-point distances against per-cell covers plus
// a per-cell union-identity bound at cover resolution.
struct CellPartition {
    std::vector<std::vector<int>> cells; // indexed by psi map j, sorted
    std::vector<Scalar> union_defect;    // per-cell cross cover bound
    std::vector<Scalar> defect_allowance; // threshold the defect was checked against
    bool certified = false;
};

// Preconditions: ratio(theta) * diam < delta certifiably, psi strongly
// separated with gap delta.  Throws IncompatibleInputs when some image meets
// no cell (the systems cannot share an attractor) and std::invalid_argument
// on precondition violations.
CellPartition partition_cells(const AttractorContext& theta, const AttractorContext& psi,
                              const Scalar& delta, const Budget& budget = {});

// Quotient system Gamma_j = { psi_j^{-1} ∘ theta_i : i in cells[j] }.
// Homogeneous with ratio r_j^{-1} * rho_theta; labels inherited from theta;
// OSC attribution inherited when both parents are attributed.
IfsSystem quotient_ifs(const IfsSystem& theta, const IfsSystem& psi, int j,
                       const CellPartition& cells);

// The unique k >= 1 with rho^k * ratio(gamma) in [band_lo, band_hi), plus
// the composed system phi^k ∘ gamma.  Requires ratio(gamma) certifiably
// above band_hi (the proof invariant); right-open upper end handled exactly.
struct NormalizedSystem {
    int k = 0;
    Scalar ratio; // rho^k * ratio(gamma)
    IfsSystem system;
};

NormalizedSystem normalize_into_band(const IfsSystem& phi, const IfsSystem& gamma,
                                     const BandParams& band,
                                     std::uint64_t map_budget = 1u << 20);

// Find the unique k >= 1 with rho^k in the band (used to pick Theta = phi^k).
int band_exponent(const Scalar& rho, const BandParams& band);

// The decomposition identity gamma(Theta) = sum_j r_j^s gamma(Gamma_j),
// checked together with its structural prerequisites: (a) every component of
// theta's adjacency graph lies inside one cell, (b) the components of cell j
// under theta's relation coincide with the components of Gamma_j, (c) the
// entrywise convex-combination residual vanishes.
struct DecompositionReport {
    bool components_within_cells = false;
    bool quotient_components_match = false;
    CharVec gamma_theta;
    std::vector<CharVec> gamma_quotients;
    std::vector<Scalar> coefficients; // r_j^s
    CharVec residual;                 // gamma(Theta) - combination
    bool residual_zero = false;       // exact zero
    bool residual_contains_zero = false;
    bool provisional = false;
};

DecompositionReport decomposition_check(const IfsSystem& theta, const IfsSystem& psi,
                                        const CellPartition& cells,
                                        const std::vector<IfsSystem>& quotients,
                                        const Budget& budget = {});

// Full pipeline driver.
enum class HarnessStatus {
    contradiction_demonstrated,
    trivially_consistent,
    inputs_incompatible,
    undecided,
};

std::string harness_status_str(HarnessStatus s);

struct HarnessOptions {
    bool assume_same_attractor = false;
    int hausdorff_depth = 12; // escalation cap for same-attractor evidence
    Rat attractor_tolerance = Rat(1, 1000000); // fraction of diam(E)
    int psi_power_cap = 8;
};

struct CellTrace {
    int j = 0;                 // 0-based psi index
    std::vector<int> members;  // theta indices
    Scalar quotient_ratio;
    int k = 0;                 // band exponent for phi^k ∘ Gamma_j
    OrderResult step;          // gamma(Gamma_j) vs gamma(phi^k ∘ Gamma_j)
    OrderResult versus_theta;  // gamma(phi^k ∘ Gamma_j) vs gamma(Theta)
};

struct HarnessReport {
    HarnessStatus status = HarnessStatus::undecided;
    std::string reason;        // gate/stage that decided the status
    Scalar attractor_evidence; // cross Hausdorff bound (when computed)
    int psi_power = 1;         // iterate of psi actually used
    int theta_power = 0;       // Theta = phi^theta_power
    Scalar delta;
    BandParams band;
    CellPartition cells;
    std::vector<CellTrace> cell_traces;
    DecompositionReport decomposition;
    bool decomposition_ran = false;
    // Fixed documentation: the maximal-system selection of the source
    // argument is not constructive; see note.
    std::string note;
};

HarnessReport contradiction_trace(const IfsSystem& phi, const IfsSystem& psi,
                                  const Budget& budget = {}, const HarnessOptions& opts = {});

// Chain gamma(phi) ≺ gamma(phi^2) ≺ ... ≺ gamma(phi^K) with per-step
// certified verdicts.  Requires phi OSC-attributed and certifiably not
// strongly separated (the strict step needs an actual merge).
struct PowerChain {
    std::vector<CharVec> gammas;     // k = 1..K
    std::vector<OrderResult> steps;  // K-1 comparisons
    bool all_strict = false;
    bool provisional = false;
};

PowerChain power_chain(const IfsSystem& phi, int K, const Budget& budget = {},
                       std::uint64_t map_budget = 1u << 20);

} // namespace ifsx
