#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relfix/analysis.hpp"
#include "relfix/solver.hpp"
#include "relfix/space.hpp"
#include "relfix/validator.hpp"

namespace relfix {

/// Machine-readable report documents (schemaVersion 1). Key order is fixed
/// so identical inputs serialize to identical bytes.

std::string axioms_report_json(const FiniteDistanceSpace& space, SpaceClass cls,
                               const AxiomReport& metricLike, const AxiomReport& partialMetric,
                               const AxiomReport& metric);

std::string hypothesis_report_json(const Instance& instance, const HypothesisReport& report,
                                   const std::optional<Corollary3Report>& corollaries);

std::string solve_report_json(const Instance& instance, const PicardResult& result,
                              const std::string& x0, int maxIter);

struct WalkSummary {
    int count = 0;
    int horizon = 0;
    std::uint64_t seed = 0;
    int stuck = 0;
    int cauchy = 0;
    int convergent = 0;
    int contradictions = 0;
};

std::string oracle_report_json(const Instance& instance, const FixedPointSet& fixedPoints,
                               const HypothesisReport& report, const ConsistencyVerdict& verdict,
                               const WalkSummary& walks);

} // namespace relfix
