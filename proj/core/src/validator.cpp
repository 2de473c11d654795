#include "relfix/validator.hpp"

#include <algorithm>
#include <utility>

#include "relfix/error.hpp"
#include "relfix/instance_io.hpp"

namespace relfix {

Instance::Instance(FiniteDistanceSpace space, FiniteRelation relation, SelfMap map,
                   std::vector<std::string> y, std::optional<std::string> x0,
                   std::optional<Rational> k, std::optional<IntegrandSpec> rho)
    : space_(std::move(space)), relation_(std::move(relation)), map_(std::move(map)),
      y_(std::move(y)), x0_(std::move(x0)), k_(std::move(k)), rho_(std::move(rho)) {}

Instance Instance::create(FiniteDistanceSpace space, FiniteRelation relation, SelfMap map,
                          std::optional<std::vector<std::string>> Y,
                          std::optional<std::string> x0, std::optional<Rational> k,
                          std::optional<IntegrandSpec> rho) {
    const Carrier& carrier = space.carrier();
    if (relation.carrier() != carrier || map.carrier() != carrier) {
        throw InstanceError("points, relation and map must agree on the carrier");
    }

    std::vector<std::string> y;
    if (Y) {
        std::vector<char> member(static_cast<size_t>(carrier.size()), 0);
        for (const auto& label : *Y) {
            member[static_cast<size_t>(carrier.at(label))] = 1;
        }
        for (int i = 0; i < carrier.size(); ++i) {
            if (member[static_cast<size_t>(i)]) y.push_back(carrier.label(i));
        }
    } else {
        y = carrier.labels();
    }

    for (const auto& image : map.image_labels()) {
        if (std::find(y.begin(), y.end(), image) == y.end()) {
            throw InstanceError("Y must contain the image of the map; '" + image +
                                "' is missing");
        }
    }
    if (x0) carrier.at(*x0);
    if (k && (*k < 0 || *k >= 1)) {
        throw InstanceError("supplied contraction constant must lie in [0, 1), got " +
                            to_string(*k));
    }
    return Instance(std::move(space), std::move(relation), std::move(map), std::move(y),
                    std::move(x0), std::move(k), std::move(rho));
}

bool Instance::y_is_whole_carrier() const {
    return static_cast<int>(y_.size()) == space_.carrier().size();
}

std::string_view to_string(Prediction prediction) {
    switch (prediction) {
        case Prediction::NoGuarantee: return "NoGuarantee";
        case Prediction::ExistenceGuaranteed: return "ExistenceGuaranteed";
        case Prediction::UniqueFixedPoint: return "UniqueFixedPoint";
    }
    return "?";
}

namespace {

std::vector<std::string> admissible_starts(const FiniteRelation& relation, const SelfMap& map) {
    std::vector<std::string> starts;
    for (int i = 0; i < relation.carrier().size(); ++i) {
        if (relation.contains(i, map.apply(i))) {
            starts.push_back(relation.carrier().label(i));
        }
    }
    return starts;
}

// Condition (f): a joining path between every ordered pair of image points.
Verdict<PointPair> image_path_condition(const FiniteRelation& symmetric, const SelfMap& map) {
    const auto images = map.image_labels();
    for (const auto& u : images) {
        for (const auto& v : images) {
            if (!find_path(symmetric, u, v)) {
                return {false, PointPair{u, v}};
            }
        }
    }
    return {};
}

bool universal_relation(const FiniteRelation& relation) {
    const int n = relation.carrier().size();
    return relation.pair_count() == n * n;
}

} // namespace

HypothesisReport validate(const Instance& instance) {
    const auto& space = instance.space();
    const auto& relation = instance.relation();
    const auto& map = instance.map();
    const auto& y = instance.Y();

    HypothesisReport report;
    report.spaceClass = classify(space);
    const bool metricLike = report.spaceClass != SpaceClass::NotMetricLike;

    report.completeness = check_r_completeness(space, relation, y);
    report.admissibleStarts = admissible_starts(relation, map);
    report.startHolds = instance.x0()
                            ? relation.contains(*instance.x0(), map.apply(*instance.x0()))
                            : !report.admissibleStarts.empty();
    report.fClosed = is_f_closed(relation, map);

    report.rContinuityLike = check_r_continuity_like(space, relation, map);
    report.sigmaSelfClosedY = check_sigma_self_closed(space, relation.restricted_to(y), y);
    report.dHolds = report.rContinuityLike.holds || report.sigmaSelfClosedY.holds;
    report.continuityLike = check_continuity_like(space, map);

    report.contraction = minimal_k(space, relation, map);
    if (instance.k()) {
        const auto verdict = check_k(space, relation, map, *instance.k());
        report.suppliedKHolds = verdict.holds;
        report.suppliedKWitness = verdict.witness;
        report.eHolds = verdict.holds;
    } else {
        report.eHolds = report.contraction.feasible;
    }

    const FiniteRelation symmetric = symmetrize(relation);
    report.pathCondition = image_path_condition(symmetric, map);
    const auto imageLabels = map.image_labels();
    report.directedImage = is_directed(symmetric, imageLabels);
    report.completeImage = is_complete(relation, imageLabels);

    if (instance.rho()) {
        report.integralContraction = integral_minimal_k(space, relation, map, *instance.rho());
    }

    const bool existence = metricLike && report.completeness.holds && report.startHolds &&
                           report.fClosed.holds && report.dHolds && report.eHolds;
    const bool uniqueness = existence && (report.pathCondition.holds ||
                                          report.directedImage.holds ||
                                          report.completeImage.holds);
    report.prediction = uniqueness ? Prediction::UniqueFixedPoint
                        : existence ? Prediction::ExistenceGuaranteed
                                    : Prediction::NoGuarantee;

    if (existence) {
        report.applicableResults.push_back("Theorem 1");
        if (instance.y_is_whole_carrier()) report.applicableResults.push_back("Corollary 1");
        if (report.continuityLike.holds || report.sigmaSelfClosedY.holds) {
            report.applicableResults.push_back("Corollary 2");
        }
        if (report.directedImage.holds || report.completeImage.holds) {
            report.applicableResults.push_back("Corollary 3");
        }
        if (universal_relation(relation) && report.pathCondition.holds) {
            report.applicableResults.push_back("Corollary 4");
        }
    }
    if (instance.rho() && metricLike && report.completeness.holds && report.startHolds &&
        report.fClosed.holds && report.dHolds && report.integralContraction->feasible) {
        report.applicableResults.push_back("Theorem 2");
        if (universal_relation(relation)) report.applicableResults.push_back("Corollary 5");
    }
    return report;
}

Corollary3Report corollary3_variants(const Instance& instance) {
    const auto& map = instance.map();
    const FiniteRelation symmetric = symmetrize(instance.relation());
    const auto imageLabels = map.image_labels();

    Corollary3Report report;
    report.directed = is_directed(symmetric, imageLabels);
    report.complete = is_complete(instance.relation(), imageLabels);

    auto paths_within = [&](int maxLength) {
        for (const auto& u : imageLabels) {
            for (const auto& v : imageLabels) {
                const auto path = find_path(symmetric, u, v);
                if (!path || path->length() > maxLength) return false;
            }
        }
        return true;
    };
    if (report.directed.holds) report.directedPathsVerified = paths_within(2);
    if (report.complete.holds) report.completePathsVerified = paths_within(1);
    return report;
}

ConsistencyVerdict cross_check(const Instance& instance, const HypothesisReport& report) {
    ConsistencyVerdict verdict;
    auto alarm = [&verdict](std::string message) {
        verdict.alarms.push_back(std::move(message));
    };

    const FixedPointSet fixed = fixed_points(instance.map());
    const bool existencePredicted = report.prediction != Prediction::NoGuarantee;

    if (existencePredicted && fixed.points.empty()) {
        alarm("existence predicted but the map has no fixed point");
    }
    if (report.prediction == Prediction::UniqueFixedPoint && fixed.points.size() != 1) {
        alarm("unique fixed point predicted but the map has " +
              std::to_string(fixed.points.size()));
    }

    std::optional<Rational> boundConstant;
    if (report.contraction.feasible) boundConstant = report.contraction.kStar;

    for (const auto& start : report.admissibleStarts) {
        PicardOptions options;
        options.relation = &instance.relation();
        options.contractionConstant = boundConstant;
        const auto result = picard(instance.space(), instance.map(), start, options);
        if (!result.certificate) {
            if (existencePredicted) {
                alarm("iteration from admissible start '" + start +
                      "' found no fixed point although the hypotheses hold");
            }
            continue;
        }
        const auto& certificate = *result.certificate;
        if (!fixed.contains(certificate.point)) {
            alarm("certificate point '" + certificate.point +
                  "' is not in the enumerated fixed-point set");
        }
        if (instance.map().apply(std::string_view(certificate.point)) != certificate.point) {
            alarm("certificate point '" + certificate.point + "' is not fixed on re-check");
        }
        if (existencePredicted) {
            if (certificate.residual != 0) {
                alarm("certificate residual at '" + certificate.point +
                      "' is nonzero although the hypotheses hold");
            }
            if (report.fClosed.holds && !certificate.preservingVerified) {
                alarm("iterate sequence from '" + start +
                      "' is not relation-preserving although the relation is map-closed");
            }
        }
    }

    if (report.prediction == Prediction::UniqueFixedPoint && report.contraction.feasible) {
        const auto uniqueness =
            uniqueness_by_paths(instance.space(), instance.relation(), instance.map(), fixed,
                                *report.contraction.kStar);
        if (uniqueness.connectedDistinctPair) {
            alarm(uniqueness.note);
        }
    }

    verdict.consistent = verdict.alarms.empty();
    if (!verdict.consistent) {
        verdict.serializedInstance = serialize_instance(instance);
    }
    return verdict;
}

} // namespace relfix
