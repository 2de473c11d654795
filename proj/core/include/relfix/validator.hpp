#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relfix/analysis.hpp"
#include "relfix/contraction.hpp"
#include "relfix/relation.hpp"
#include "relfix/solver.hpp"
#include "relfix/space.hpp"

namespace relfix {

/// Full input to hypothesis checking: distance table, relation, self-map,
/// a subset Y containing the image of the map, and optional start point,
/// contraction constant and integrand. Structural requirements (shared
/// carrier, f(X) inside Y, k in [0,1)) are enforced at creation.
class Instance {
public:
    static Instance create(FiniteDistanceSpace space, FiniteRelation relation, SelfMap map,
                           std::optional<std::vector<std::string>> Y = std::nullopt,
                           std::optional<std::string> x0 = std::nullopt,
                           std::optional<Rational> k = std::nullopt,
                           std::optional<IntegrandSpec> rho = std::nullopt);

    const FiniteDistanceSpace& space() const { return space_; }
    const FiniteRelation& relation() const { return relation_; }
    const SelfMap& map() const { return map_; }
    /// Y in carrier order.
    const std::vector<std::string>& Y() const { return y_; }
    bool y_is_whole_carrier() const;
    const std::optional<std::string>& x0() const { return x0_; }
    const std::optional<Rational>& k() const { return k_; }
    const std::optional<IntegrandSpec>& rho() const { return rho_; }

private:
    Instance(FiniteDistanceSpace space, FiniteRelation relation, SelfMap map,
             std::vector<std::string> y, std::optional<std::string> x0,
             std::optional<Rational> k, std::optional<IntegrandSpec> rho);

    FiniteDistanceSpace space_;
    FiniteRelation relation_;
    SelfMap map_;
    std::vector<std::string> y_;
    std::optional<std::string> x0_;
    std::optional<Rational> k_;
    std::optional<IntegrandSpec> rho_;
};

enum class Prediction { NoGuarantee, ExistenceGuaranteed, UniqueFixedPoint };

std::string_view to_string(Prediction prediction);

/// Per-condition verdicts for the relational contraction principle.
/// Labels follow the hypothesis list: (a) completeness of Y under
/// relation-preserving sequences, (b) a start point related to its image,
/// (c) closedness of the relation under the map, (d) the continuity /
/// self-closedness disjunction, (e) the contraction condition, and the
/// three uniqueness variants (f), (f'), (f'').
struct HypothesisReport {
    SpaceClass spaceClass = SpaceClass::NotMetricLike;

    PropertyReport completeness;  // (a)
    bool startHolds = false;      // (b)
    std::vector<std::string> admissibleStarts;
    Verdict<MapViolation> fClosed; // (c)

    PropertyReport rContinuityLike;   // (d), first branch
    PropertyReport sigmaSelfClosedY;  // (d), second branch, relation restricted to Y
    bool dHolds = false;
    PropertyReport continuityLike; // universal-relation continuity, for the corollaries

    ContractionReport contraction; // (e)
    std::optional<bool> suppliedKHolds;
    std::optional<PointPair> suppliedKWitness;
    bool eHolds = false;

    Verdict<PointPair> pathCondition;  // (f): paths between all image points
    Verdict<PointPair> directedImage;  // (f')
    Verdict<PointPair> completeImage;  // (f'')

    std::optional<ContractionReport> integralContraction; // when an integrand is supplied

    Prediction prediction = Prediction::NoGuarantee;
    std::vector<std::string> applicableResults;
};

/// Evaluates every hypothesis mechanically and derives the prediction:
/// UniqueFixedPoint when (a)-(e) and a uniqueness variant hold,
/// ExistenceGuaranteed when (a)-(e) hold, NoGuarantee otherwise. The
/// ambient requirement that the table is metric-like gates any positive
/// prediction.
HypothesisReport validate(const Instance& instance);

/// The two replacements for condition (f), each with the construction the
/// replacement promises: a joining path of length <= 2 from directedness,
/// of length <= 1 from completeness of the restricted relation.
struct Corollary3Report {
    Verdict<PointPair> directed;  // (f')
    Verdict<PointPair> complete;  // (f'')
    bool directedPathsVerified = false; // length <= 2 between all image points
    bool completePathsVerified = false; // length <= 1 between all image points
};

Corollary3Report corollary3_variants(const Instance& instance);

/// Brute-force cross-examination of a report: fixed points are enumerated
/// directly, the iteration is run from every admissible start, and any
/// clash with the prediction is surfaced as a soundness alarm carrying the
/// serialized instance. Alarms are data, not exceptions.
struct ConsistencyVerdict {
    bool consistent = true;
    std::vector<std::string> alarms;
    std::string serializedInstance; // populated when alarms exist
};

ConsistencyVerdict cross_check(const Instance& instance, const HypothesisReport& report);

} // namespace relfix
