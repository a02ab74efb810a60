#pragma once

#include "ifsx/harness.hpp"

#include <string>

namespace ifsx {

// One-stop separation analysis of a system: dimension data, certified
// adjacency, component partition, characteristic vector.
struct AnalysisReport {
    int dim = 1;
    Mode mode = Mode::exact;
    int n_maps = 0;
    bool homogeneous = false;
    SimilarityDimension sdim;
    OscStatus osc = OscStatus::unknown;
    AdjacencyGraph graph;
    ComponentPartition partition;
    CharVec gamma;
    bool certified = false; // every pairwise verdict decided
};

AnalysisReport analyze(const IfsSystem& sys, const Budget& budget = {});

// Deterministic renderings.  All numbers are exact rational strings (plus
// fixed-precision decimal approximations computed by exact floor division),
// so identical inputs and budgets give byte-identical output.
std::string analysis_json(const AnalysisReport& r);
std::string analysis_text(const AnalysisReport& r);

std::string order_json(const OrderResult& r);
std::string order_text(const OrderResult& r);

std::string chain_json(const PowerChain& c);
std::string chain_text(const PowerChain& c);

std::string harness_json(const HarnessReport& r);
std::string harness_text(const HarnessReport& r);

std::string monotonicity_json(const MonotonicityReport& r);
std::string monotonicity_text(const MonotonicityReport& r);

} // namespace ifsx
