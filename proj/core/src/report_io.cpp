#include "relfix/report_io.hpp"

#include <json.hpp>

namespace relfix {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json violation_to_json(const AxiomViolation& violation) {
    return ordered_json{{"axiom", std::string(to_string(violation.axiom))},
                        {"witness", violation.witness},
                        {"lhs", to_string(violation.lhs)},
                        {"rhs", to_string(violation.rhs)}};
}

ordered_json axiom_report_to_json(const AxiomReport& report) {
    ordered_json violations = ordered_json::array();
    for (const auto& violation : report.violations) {
        violations.push_back(violation_to_json(violation));
    }
    return ordered_json{{"satisfied", report.satisfied}, {"violations", std::move(violations)}};
}

ordered_json tail_to_json(const TailSet& tail) {
    return ordered_json{
        {"members", tail.members},
        {"cauchyValue", tail.cauchyValue ? ordered_json(to_string(*tail.cauchyValue))
                                         : ordered_json(nullptr)}};
}

ordered_json property_to_json(const PropertyReport& report) {
    ordered_json witness(nullptr);
    if (report.witness) {
        witness = ordered_json{{"tail", tail_to_json(report.witness->tail)},
                               {"limitPoint", report.witness->limitPoint
                                                  ? ordered_json(*report.witness->limitPoint)
                                                  : ordered_json(nullptr)}};
    }
    return ordered_json{{"holds", report.holds}, {"witness", std::move(witness)}};
}

ordered_json pair_to_json(const PointPair& pair) {
    return ordered_json::array({pair.first, pair.second});
}

template <typename Witness, typename ToJson>
ordered_json verdict_to_json(const Verdict<Witness>& verdict, ToJson&& toJson) {
    return ordered_json{{"holds", verdict.holds},
                        {"witness", verdict.witness ? toJson(*verdict.witness)
                                                    : ordered_json(nullptr)}};
}

ordered_json contraction_to_json(const ContractionReport& report) {
    ordered_json blocking = ordered_json::array();
    for (const auto& pair : report.blockingPairs) {
        blocking.push_back(ordered_json{{"pair", pair_to_json(pair.pair)},
                                        {"sourceDistance", to_string(pair.sourceDistance)},
                                        {"imageDistance", to_string(pair.imageDistance)}});
    }
    return ordered_json{
        {"feasible", report.feasible},
        {"kStar", report.kStar ? ordered_json(to_string(*report.kStar)) : ordered_json(nullptr)},
        {"blockingPairs", std::move(blocking)}};
}

ordered_json certificate_to_json(const FixedPointCertificate& certificate) {
    return ordered_json{{"point", certificate.point},
                        {"selfDistance", to_string(certificate.selfDistance)},
                        {"residual", to_string(certificate.residual)},
                        {"iterations", certificate.iterations},
                        {"preservingVerified", certificate.preservingVerified}};
}

std::string dump(const ordered_json& document) {
    return document.dump(2) + "\n";
}

} // namespace

std::string axioms_report_json(const FiniteDistanceSpace& space, SpaceClass cls,
                               const AxiomReport& metricLike, const AxiomReport& partialMetric,
                               const AxiomReport& metric) {
    ordered_json document;
    document["schemaVersion"] = 1;
    document["command"] = "check-axioms";
    document["points"] = space.carrier().labels();
    document["classification"] = std::string(to_string(cls));
    document["metricLike"] = axiom_report_to_json(metricLike);
    document["partialMetric"] = axiom_report_to_json(partialMetric);
    document["metric"] = axiom_report_to_json(metric);
    return dump(document);
}

std::string hypothesis_report_json(const Instance& instance, const HypothesisReport& report,
                                   const std::optional<Corollary3Report>& corollaries) {
    ordered_json document;
    document["schemaVersion"] = 1;
    document["command"] = "validate";
    document["points"] = instance.space().carrier().labels();
    document["Y"] = instance.Y();
    document["spaceClass"] = std::string(to_string(report.spaceClass));

    ordered_json conditions;
    conditions["a"] = property_to_json(report.completeness);
    conditions["b"] = ordered_json{
        {"holds", report.startHolds},
        {"x0", instance.x0() ? ordered_json(*instance.x0()) : ordered_json(nullptr)},
        {"admissibleStarts", report.admissibleStarts}};
    conditions["c"] = verdict_to_json(report.fClosed, [](const MapViolation& violation) {
        return ordered_json{{"source", pair_to_json(violation.source)},
                            {"image", pair_to_json(violation.image)}};
    });
    conditions["d"] = ordered_json{{"holds", report.dHolds},
                                   {"rContinuityLike", property_to_json(report.rContinuityLike)},
                                   {"sigmaSelfClosedOnY", property_to_json(report.sigmaSelfClosedY)}};

    ordered_json conditionE = contraction_to_json(report.contraction);
    conditionE["holds"] = report.eHolds;
    if (instance.k()) {
        conditionE["suppliedK"] =
            ordered_json{{"value", to_string(*instance.k())},
                         {"holds", *report.suppliedKHolds},
                         {"witness", report.suppliedKWitness
                                         ? pair_to_json(*report.suppliedKWitness)
                                         : ordered_json(nullptr)}};
    } else {
        conditionE["suppliedK"] = nullptr;
    }
    conditions["e"] = std::move(conditionE);

    auto plainPair = [](const PointPair& pair) { return pair_to_json(pair); };
    conditions["f"] = verdict_to_json(report.pathCondition, plainPair);
    conditions["fPrime"] = verdict_to_json(report.directedImage, plainPair);
    conditions["fDoublePrime"] = verdict_to_json(report.completeImage, plainPair);
    document["conditions"] = std::move(conditions);

    document["continuityLike"] = property_to_json(report.continuityLike);
    document["integral"] = report.integralContraction
                               ? contraction_to_json(*report.integralContraction)
                               : ordered_json(nullptr);

    if (corollaries) {
        document["corollary3"] =
            ordered_json{{"directed", verdict_to_json(corollaries->directed, plainPair)},
                         {"complete", verdict_to_json(corollaries->complete, plainPair)},
                         {"directedPathsVerified", corollaries->directedPathsVerified},
                         {"completePathsVerified", corollaries->completePathsVerified}};
    } else {
        document["corollary3"] = nullptr;
    }

    document["prediction"] = std::string(to_string(report.prediction));
    document["applicableResults"] = report.applicableResults;
    return dump(document);
}

std::string solve_report_json(const Instance& instance, const PicardResult& result,
                              const std::string& x0, int maxIter) {
    ordered_json document;
    document["schemaVersion"] = 1;
    document["command"] = "solve";
    document["points"] = instance.space().carrier().labels();
    document["x0"] = x0;
    document["maxIter"] = maxIter;

    ordered_json gaps = ordered_json::array();
    for (const auto& gap : result.trace.gaps) gaps.push_back(to_string(gap));
    ordered_json bounds = ordered_json::array();
    for (const auto& bound : result.trace.bounds) bounds.push_back(to_string(bound));
    document["trace"] = ordered_json{{"iterates", result.trace.iterates},
                                     {"gaps", std::move(gaps)},
                                     {"bounds", std::move(bounds)}};
    document["converged"] = result.certificate.has_value();
    document["certificate"] = result.certificate ? certificate_to_json(*result.certificate)
                                                 : ordered_json(nullptr);
    return dump(document);
}

std::string oracle_report_json(const Instance& instance, const FixedPointSet& fixedPoints,
                               const HypothesisReport& report, const ConsistencyVerdict& verdict,
                               const WalkSummary& walks) {
    ordered_json document;
    document["schemaVersion"] = 1;
    document["command"] = "oracle";
    document["points"] = instance.space().carrier().labels();
    document["fixedPoints"] = fixedPoints.points;
    document["prediction"] = std::string(to_string(report.prediction));
    document["consistent"] = verdict.consistent;
    document["alarms"] = verdict.alarms;
    document["instance"] = verdict.serializedInstance.empty()
                               ? ordered_json(nullptr)
                               : ordered_json::parse(verdict.serializedInstance);
    document["walks"] = ordered_json{{"count", walks.count},
                                     {"horizon", walks.horizon},
                                     {"seed", walks.seed},
                                     {"stuck", walks.stuck},
                                     {"cauchy", walks.cauchy},
                                     {"convergent", walks.convergent},
                                     {"contradictions", walks.contradictions}};
    return dump(document);
}

} // namespace relfix
