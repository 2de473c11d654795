#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relfix/rational.hpp"
#include "relfix/relation.hpp"
#include "relfix/space.hpp"

namespace relfix {

/// One related pair that rules out a contraction constant below 1: either
/// the source distance is zero while the image distance is not (no finite
/// constant works), or the image/source ratio is >= 1.
struct BlockingPair {
    PointPair pair;
    Rational sourceDistance;
    Rational imageDistance;
};

/// kStar is the infimum of constants satisfying the contraction inequality
/// on all related pairs: the maximum image/source ratio over pairs with
/// positive source distance (0 when there are none). It is absent exactly
/// when a zero-distance blocker makes every constant fail. Feasibility
/// additionally demands kStar < 1 strictly.
struct ContractionReport {
    bool feasible = false;
    std::optional<Rational> kStar;
    std::vector<BlockingPair> blockingPairs;
};

/// Exact infimum of the contraction constant over related pairs.
ContractionReport minimal_k(const FiniteDistanceSpace& space,
                            const FiniteRelation& relation, const SelfMap& map);

/// dist(fx, fy) <= k * dist(x, y) on every related pair, exact comparison.
/// k outside [0, 1) is rejected with std::domain_error rather than accepted
/// silently. Witness: first failing pair in carrier order.
Verdict<PointPair> check_k(const FiniteDistanceSpace& space,
                           const FiniteRelation& relation, const SelfMap& map,
                           const Rational& k);

/// Catalog of integrands with exactly computable integrals, each positive
/// on every interval (0, e) and integrable on compacts by construction:
///   - constant   rho(t) = c                      with c > 0
///   - power      rho(t) = c * t^alpha            with c > 0, integer alpha >= 0
///   - piecewise  linear through (t_i, v_i)       with t_0 = 0, t_i increasing,
///                v_i > 0; constant v_last beyond the table
/// Restricting to this catalog keeps every integral an exact rational, so
/// contraction ratios stay exactly comparable. Parameters outside the
/// catalog are rejected with InstanceError at construction.
class IntegrandSpec {
public:
    enum class Kind { Constant, Power, PiecewiseLinear };

    static IntegrandSpec constant(Rational c);
    static IntegrandSpec power(Rational c, unsigned long alpha);
    static IntegrandSpec piecewise_linear(std::vector<std::pair<Rational, Rational>> points);

    Kind kind() const { return kind_; }
    const Rational& scale() const { return scale_; }
    unsigned long exponent() const { return exponent_; }
    const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }

private:
    IntegrandSpec(Kind kind, Rational scale, unsigned long exponent,
                  std::vector<std::pair<Rational, Rational>> points);

    Kind kind_;
    Rational scale_;
    unsigned long exponent_ = 0;
    std::vector<std::pair<Rational, Rational>> points_;
};

/// Exact integral of rho over [0, upper]; strictly positive when upper > 0.
Rational integrate(const IntegrandSpec& rho, const Rational& upper);

/// Re-checks that the integral over (0, e) is strictly positive for each
/// given epsilon. Catalog membership already guarantees this; epsilons must
/// be positive.
bool check_omega(const IntegrandSpec& rho, std::span<const Rational> epsilons);

/// minimal_k with ratios of integrals in place of ratios of distances.
ContractionReport integral_minimal_k(const FiniteDistanceSpace& space,
                                     const FiniteRelation& relation, const SelfMap& map,
                                     const IntegrandSpec& rho);

} // namespace relfix
