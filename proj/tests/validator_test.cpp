#include "relfix/validator.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "relfix/error.hpp"
#include "relfix/instance_io.hpp"

using namespace relfix;
using namespace relfix::testing;

namespace {

bool applicable(const HypothesisReport& report, const char* name) {
    for (const auto& result : report.applicableResults) {
        if (result == name) return true;
    }
    return false;
}

// every metric-like table over {0,1,2} on two points, with every relation
// and every map; small enough for a unit test
template <typename Callback>
void for_each_two_point_instance(Callback&& callback) {
    const auto carrier = Carrier::create({"a", "b"});
    for (int daa = 0; daa <= 2; ++daa) {
        for (int dbb = 0; dbb <= 2; ++dbb) {
            for (int dab = 1; dab <= 2; ++dab) { // zero cross-distance breaks sigma1
                const auto space = FiniteDistanceSpace::from_table(
                    carrier, {Rational(daa), Rational(dab), Rational(dab), Rational(dbb)});
                if (!check_metric_like(space).satisfied) continue;
                for (int bits = 0; bits < 16; ++bits) {
                    std::vector<PointPair> pairs;
                    for (int i = 0; i < 2; ++i) {
                        for (int j = 0; j < 2; ++j) {
                            if (bits >> (i * 2 + j) & 1) {
                                pairs.emplace_back(carrier.label(i), carrier.label(j));
                            }
                        }
                    }
                    const auto relation = FiniteRelation::create(carrier, pairs);
                    for (int mapBits = 0; mapBits < 4; ++mapBits) {
                        const auto map = SelfMap::create(
                            carrier, {{"a", carrier.label(mapBits & 1)},
                                      {"b", carrier.label(mapBits >> 1 & 1)}});
                        callback(Instance::create(space, relation, map));
                    }
                }
            }
        }
    }
}

} // namespace

TEST(Validator, Example2SatisfiesEveryHypothesis) {
    const auto report = validate(example2_instance());
    EXPECT_EQ(report.spaceClass, SpaceClass::MetricLike);
    EXPECT_TRUE(report.completeness.holds);
    EXPECT_TRUE(report.startHolds);
    EXPECT_EQ(report.admissibleStarts, (std::vector<std::string>{"a", "b"}));
    EXPECT_TRUE(report.fClosed.holds);
    EXPECT_TRUE(report.dHolds);
    EXPECT_TRUE(report.rContinuityLike.holds);
    EXPECT_TRUE(report.sigmaSelfClosedY.holds);
    EXPECT_TRUE(report.eHolds);
    EXPECT_EQ(*report.contraction.kStar, 0);
    EXPECT_TRUE(report.pathCondition.holds);
    EXPECT_TRUE(report.directedImage.holds);
    EXPECT_TRUE(report.completeImage.holds);
    EXPECT_EQ(report.prediction, Prediction::UniqueFixedPoint);
    EXPECT_TRUE(applicable(report, "Theorem 1"));
    EXPECT_TRUE(applicable(report, "Corollary 3"));
    EXPECT_FALSE(applicable(report, "Corollary 1")); // Y is a proper subset
    EXPECT_FALSE(applicable(report, "Corollary 4")); // relation not universal
}

TEST(Validator, Example2UnderTheUniversalRelation) {
    const auto report = validate(example2_universal_instance());
    EXPECT_TRUE(report.eHolds);
    EXPECT_EQ(*report.contraction.kStar, Rational(1, 2));
    EXPECT_EQ(report.prediction, Prediction::UniqueFixedPoint);
    EXPECT_TRUE(applicable(report, "Corollary 1"));
    EXPECT_TRUE(applicable(report, "Corollary 4"));
}

TEST(Validator, TwoCycleCannotContract) {
    const auto report = validate(two_cycle_instance());
    EXPECT_FALSE(report.eHolds);
    ASSERT_TRUE(report.contraction.kStar.has_value());
    EXPECT_EQ(*report.contraction.kStar, 1);
    EXPECT_EQ(report.prediction, Prediction::NoGuarantee);
}

TEST(Validator, EmptyRelationFailsTheStartCondition) {
    const auto base = example2_instance();
    const auto instance =
        Instance::create(base.space(), FiniteRelation::empty(base.space().carrier()),
                         base.map(), std::vector<std::string>{"a", "b"});
    const auto report = validate(instance);
    EXPECT_FALSE(report.startHolds);
    EXPECT_TRUE(report.admissibleStarts.empty());
    EXPECT_EQ(report.prediction, Prediction::NoGuarantee);
}

TEST(Validator, IdentityOnDiagonalGuaranteesExistenceOnly) {
    const auto report = validate(identity_diagonal_instance());
    EXPECT_TRUE(report.eHolds);
    EXPECT_FALSE(report.pathCondition.holds);
    EXPECT_FALSE(report.directedImage.holds);
    EXPECT_FALSE(report.completeImage.holds);
    EXPECT_EQ(report.prediction, Prediction::ExistenceGuaranteed);
}

TEST(Validator, InstanceCreationRejectsStructuralErrors) {
    const auto base = example2_instance();
    EXPECT_THROW(Instance::create(base.space(), base.relation(), base.map(),
                                  std::vector<std::string>{"a"}),
                 InstanceError); // fX = {a, b} escapes Y
    EXPECT_THROW(Instance::create(base.space(), base.relation(), base.map(),
                                  std::vector<std::string>{"a", "b"}, "z"),
                 InstanceError);
    EXPECT_THROW(Instance::create(base.space(), base.relation(), base.map(),
                                  std::vector<std::string>{"a", "b"}, std::nullopt, Rational(1)),
                 InstanceError);
    EXPECT_THROW(Instance::create(base.space(), base.relation(), base.map(),
                                  std::vector<std::string>{"a", "b", "z"}),
                 InstanceError);

    const auto other = Carrier::create({"x", "y"});
    EXPECT_THROW(Instance::create(base.space(), FiniteRelation::empty(other), base.map()),
                 InstanceError);
}

TEST(Validator, SuppliedConstantIsCheckedVerbatim) {
    const auto base = example2_universal_instance();
    const auto good = Instance::create(base.space(), base.relation(), base.map(), std::nullopt,
                                       std::nullopt, Rational(1, 2));
    const auto goodReport = validate(good);
    EXPECT_TRUE(goodReport.eHolds);
    ASSERT_TRUE(goodReport.suppliedKHolds.has_value());
    EXPECT_TRUE(*goodReport.suppliedKHolds);

    const auto bad = Instance::create(base.space(), base.relation(), base.map(), std::nullopt,
                                      std::nullopt, Rational(1, 4));
    const auto badReport = validate(bad);
    EXPECT_FALSE(badReport.eHolds);
    EXPECT_EQ(*badReport.suppliedKWitness, (PointPair{"a", "c"}));
    EXPECT_EQ(badReport.prediction, Prediction::NoGuarantee);
}

TEST(Validator, NonMetricLikeTablesNeverEarnAPrediction) {
    const auto carrier = Carrier::create({"a", "b"});
    const auto space = FiniteDistanceSpace::from_table(
        carrier, {Rational(0), Rational(0), Rational(0), Rational(0)});
    const auto instance = Instance::create(space, FiniteRelation::universal(carrier),
                                           SelfMap::create(carrier, {{"a", "a"}, {"b", "a"}}));
    const auto report = validate(instance);
    EXPECT_EQ(report.spaceClass, SpaceClass::NotMetricLike);
    EXPECT_EQ(report.prediction, Prediction::NoGuarantee);
}

TEST(Validator, Corollary3VariantsOnExample2) {
    const auto report = corollary3_variants(example2_instance());
    EXPECT_TRUE(report.directed.holds);
    EXPECT_TRUE(report.complete.holds);
    EXPECT_TRUE(report.directedPathsVerified);
    EXPECT_TRUE(report.completePathsVerified);
}

TEST(Validator, Corollary3VariantsOnTheEmptyRelation) {
    const auto base = example2_instance();
    const auto instance =
        Instance::create(base.space(), FiniteRelation::empty(base.space().carrier()),
                         base.map(), std::vector<std::string>{"a", "b"});
    const auto report = corollary3_variants(instance);
    EXPECT_FALSE(report.directed.holds);
    EXPECT_FALSE(report.complete.holds);
}

TEST(Validator, CrossCheckAcceptsExample2) {
    const auto instance = example2_instance();
    const auto verdict = cross_check(instance, validate(instance));
    EXPECT_TRUE(verdict.consistent);
    EXPECT_TRUE(verdict.alarms.empty());
}

TEST(Validator, CrossCheckToleratesFixedPointsWithoutGuarantees) {
    // hypotheses fail but fixed points exist: they are sufficient, not necessary
    const auto instance = two_cycle_instance();
    const auto verdict = cross_check(instance, validate(instance));
    EXPECT_TRUE(verdict.consistent);

    const auto identity = identity_diagonal_instance();
    const auto identityVerdict = cross_check(identity, validate(identity));
    EXPECT_TRUE(identityVerdict.consistent);
}

TEST(Validator, CrossCheckRaisesAlarmsOnATamperedReport) {
    const auto instance = identity_diagonal_instance();
    auto report = validate(instance);
    report.prediction = Prediction::UniqueFixedPoint; // lie: there are two fixed points
    const auto verdict = cross_check(instance, report);
    EXPECT_FALSE(verdict.consistent);
    EXPECT_FALSE(verdict.alarms.empty());
    EXPECT_FALSE(verdict.serializedInstance.empty());
}

TEST(Validator, PredictionsAreSoundOnAllTwoPointInstances) {
    int instances = 0;
    for_each_two_point_instance([&](const Instance& instance) {
        ++instances;
        const auto report = validate(instance);
        const auto fixed = fixed_points(instance.map());
        if (report.prediction != Prediction::NoGuarantee) {
            EXPECT_FALSE(fixed.points.empty()) << serialize_instance(instance);
        }
        if (report.prediction == Prediction::UniqueFixedPoint) {
            EXPECT_EQ(fixed.points.size(), 1u) << serialize_instance(instance);
        }
        const auto verdict = cross_check(instance, report);
        EXPECT_TRUE(verdict.consistent) << serialize_instance(instance);

        // the corollary variants only ever strengthen the path condition
        if (report.completeImage.holds || report.directedImage.holds) {
            EXPECT_TRUE(report.pathCondition.holds);
        }
    });
    EXPECT_GT(instances, 1000);
}

TEST(Validator, IntegralConditionTracksTheLinearOneOnSweepInstances) {
    // with rho(t) = t the integral ratios are the squared distance ratios,
    // so feasibility coincides with the linear condition and the same
    // existence and uniqueness conclusions must hold
    const auto rho = IntegrandSpec::power(Rational(1), 1);
    for_each_two_point_instance([&](const Instance& base) {
        const auto instance =
            Instance::create(base.space(), base.relation(), base.map(),
                             std::nullopt, std::nullopt, std::nullopt, rho);
        const auto report = validate(instance);
        ASSERT_TRUE(report.integralContraction.has_value());
        EXPECT_EQ(report.integralContraction->feasible, report.contraction.feasible);

        const bool integralExistence =
            report.spaceClass != SpaceClass::NotMetricLike && report.completeness.holds &&
            report.startHolds && report.fClosed.holds && report.dHolds &&
            report.integralContraction->feasible;
        const auto fixed = fixed_points(instance.map());
        if (integralExistence) {
            EXPECT_TRUE(applicable(report, "Theorem 2"));
            EXPECT_FALSE(fixed.points.empty()) << serialize_instance(instance);
            if (report.pathCondition.holds) {
                EXPECT_EQ(fixed.points.size(), 1u) << serialize_instance(instance);
            }
        }
    });
}

TEST(Validator, CorollaryOneMatchesPlainValidationWhenYIsEverything) {
    Rng rng(404);
    for (int round = 0; round < 100; ++round) {
        const auto space = random_metric_like(rng, rng.uniform(1, 4));
        const auto relation = random_relation(rng, space.carrier(), rng.uniform(10, 90));
        const auto map = random_map(rng, space.carrier());
        const auto explicitY =
            Instance::create(space, relation, map, space.carrier().labels());
        const auto defaulted = Instance::create(space, relation, map);

        const auto a = validate(explicitY);
        const auto b = validate(defaulted);
        EXPECT_EQ(a.prediction, b.prediction);
        EXPECT_EQ(a.applicableResults, b.applicableResults);
        if (a.prediction != Prediction::NoGuarantee) {
            EXPECT_TRUE(applicable(a, "Corollary 1"));
        }
    }
}
