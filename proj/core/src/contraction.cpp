#include "relfix/contraction.hpp"

#include <stdexcept>
#include <utility>

#include "relfix/error.hpp"

namespace relfix {

namespace {

void require_shared_carrier(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                            const SelfMap& map) {
    if (space.carrier() != relation.carrier() || space.carrier() != map.carrier()) {
        throw InstanceError("space, relation and map live on different carriers");
    }
}

// Shared shape of the linear and the integral report: `measure` maps a
// distance to the quantity whose ratios bound the constant.
template <typename Measure>
ContractionReport contraction_report(const FiniteDistanceSpace& space,
                                     const FiniteRelation& relation, const SelfMap& map,
                                     Measure&& measure) {
    ContractionReport report;
    Rational best(0);
    bool unbounded = false;
    const auto& carrier = space.carrier();
    for (int i = 0; i < carrier.size(); ++i) {
        for (int j = 0; j < carrier.size(); ++j) {
            if (!relation.contains(i, j)) continue;
            const Rational source = measure(space.dist(i, j));
            const Rational image = measure(space.dist(map.apply(i), map.apply(j)));
            if (source == 0) {
                if (image > 0) {
                    unbounded = true;
                    report.blockingPairs.push_back(
                        {{carrier.label(i), carrier.label(j)}, space.dist(i, j),
                         space.dist(map.apply(i), map.apply(j))});
                }
                continue;
            }
            if (image >= source) {
                report.blockingPairs.push_back(
                    {{carrier.label(i), carrier.label(j)}, space.dist(i, j),
                     space.dist(map.apply(i), map.apply(j))});
            }
            Rational ratio = image / source;
            if (ratio > best) best = std::move(ratio);
        }
    }
    if (!unbounded) report.kStar = std::move(best);
    report.feasible = report.blockingPairs.empty() && report.kStar && *report.kStar < 1;
    return report;
}

} // namespace

ContractionReport minimal_k(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                            const SelfMap& map) {
    require_shared_carrier(space, relation, map);
    return contraction_report(space, relation, map, [](const Rational& d) { return d; });
}

Verdict<PointPair> check_k(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                           const SelfMap& map, const Rational& k) {
    require_shared_carrier(space, relation, map);
    if (k < 0 || k >= 1) {
        throw std::domain_error("contraction constant must lie in [0, 1), got " + to_string(k));
    }
    const auto& carrier = space.carrier();
    for (int i = 0; i < carrier.size(); ++i) {
        for (int j = 0; j < carrier.size(); ++j) {
            if (!relation.contains(i, j)) continue;
            if (space.dist(map.apply(i), map.apply(j)) > k * space.dist(i, j)) {
                return {false, PointPair{carrier.label(i), carrier.label(j)}};
            }
        }
    }
    return {};
}

IntegrandSpec::IntegrandSpec(Kind kind, Rational scale, unsigned long exponent,
                             std::vector<std::pair<Rational, Rational>> points)
    : kind_(kind), scale_(std::move(scale)), exponent_(exponent), points_(std::move(points)) {}

IntegrandSpec IntegrandSpec::constant(Rational c) {
    if (c <= 0) {
        throw InstanceError("constant integrand needs c > 0, got " + to_string(c));
    }
    return IntegrandSpec(Kind::Constant, std::move(c), 0, {});
}

IntegrandSpec IntegrandSpec::power(Rational c, unsigned long alpha) {
    if (c <= 0) {
        throw InstanceError("power integrand needs c > 0, got " + to_string(c));
    }
    return IntegrandSpec(Kind::Power, std::move(c), alpha, {});
}

IntegrandSpec IntegrandSpec::piecewise_linear(std::vector<std::pair<Rational, Rational>> points) {
    if (points.empty()) {
        throw InstanceError("piecewise-linear integrand needs at least one point");
    }
    if (points.front().first != 0) {
        throw InstanceError("piecewise-linear integrand must start at t = 0");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].second <= 0) {
            throw InstanceError("piecewise-linear integrand values must be positive");
        }
        if (i > 0 && points[i].first <= points[i - 1].first) {
            throw InstanceError("piecewise-linear abscissae must be strictly increasing");
        }
    }
    return IntegrandSpec(Kind::PiecewiseLinear, Rational(1), 0, std::move(points));
}

Rational integrate(const IntegrandSpec& rho, const Rational& upper) {
    if (upper < 0) {
        throw InstanceError("integration bound must be nonnegative, got " + to_string(upper));
    }
    switch (rho.kind()) {
        case IntegrandSpec::Kind::Constant:
            return rho.scale() * upper;
        case IntegrandSpec::Kind::Power:
            // int_0^b c t^a dt = c b^{a+1} / (a+1)
            return rho.scale() * rational_pow(upper, rho.exponent() + 1) /
                   Rational(static_cast<long>(rho.exponent()) + 1);
        case IntegrandSpec::Kind::PiecewiseLinear: {
            const auto& pts = rho.points();
            Rational total(0);
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                const auto& [t0, v0] = pts[i];
                const auto& [t1, v1] = pts[i + 1];
                if (upper <= t0) return total;
                const Rational hi = upper < t1 ? upper : t1;
                const Rational vHi = v0 + (v1 - v0) * (hi - t0) / (t1 - t0);
                total += (v0 + vHi) / 2 * (hi - t0);
            }
            const auto& [tLast, vLast] = pts.back();
            if (upper > tLast) total += vLast * (upper - tLast);
            return total;
        }
    }
    throw std::logic_error("unreachable integrand kind");
}

bool check_omega(const IntegrandSpec& rho, std::span<const Rational> epsilons) {
    for (const Rational& eps : epsilons) {
        if (eps <= 0) {
            throw InstanceError("epsilon must be positive, got " + to_string(eps));
        }
        if (integrate(rho, eps) <= 0) return false;
    }
    return true;
}

ContractionReport integral_minimal_k(const FiniteDistanceSpace& space,
                                     const FiniteRelation& relation, const SelfMap& map,
                                     const IntegrandSpec& rho) {
    require_shared_carrier(space, relation, map);
    return contraction_report(space, relation, map,
                              [&rho](const Rational& d) { return integrate(rho, d); });
}

} // namespace relfix
