#include "relfix/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "relfix/error.hpp"

namespace relfix {

PicardResult picard(const FiniteDistanceSpace& space, const SelfMap& map,
                    std::string_view x0, const PicardOptions& options) {
    if (space.carrier() != map.carrier()) {
        throw InstanceError("space and map live on different carriers");
    }
    if (options.relation && options.relation->carrier() != space.carrier()) {
        throw InstanceError("relation lives on a different carrier");
    }
    const int maxIter = options.maxIter > 0 ? options.maxIter : space.size() + 1;

    PicardResult result;
    std::vector<int> orbit{space.carrier().at(x0)};
    int fixedAt = -1;
    for (int step = 1; step <= maxIter; ++step) {
        const int current = orbit.back();
        const int next = map.apply(current);
        orbit.push_back(next);
        if (next == current) {
            fixedAt = step - 1;
            break;
        }
    }

    auto& trace = result.trace;
    for (int index : orbit) trace.iterates.push_back(space.carrier().label(index));
    for (size_t i = 0; i + 1 < orbit.size(); ++i) {
        trace.gaps.push_back(space.dist(orbit[i], orbit[i + 1]));
    }
    if (options.contractionConstant && !trace.gaps.empty()) {
        const Rational& d0 = trace.gaps.front();
        for (size_t n = 0; n < trace.gaps.size(); ++n) {
            trace.bounds.push_back(
                a_priori_bound(*options.contractionConstant, static_cast<int>(n), d0));
        }
    }

    if (fixedAt >= 0) {
        const int point = orbit.back();
        FixedPointCertificate certificate;
        certificate.point = space.carrier().label(point);
        certificate.selfDistance = space.dist(point, point);
        certificate.residual = space.dist(point, map.apply(point));
        certificate.iterations = fixedAt;
        certificate.preservingVerified =
            options.relation && is_preserving(*options.relation, trace.iterates);
        result.certificate = std::move(certificate);
    }
    return result;
}

Rational a_priori_bound(const Rational& k, int n, const Rational& d0) {
    if (k < 0 || k >= 1) {
        throw std::domain_error("contraction constant must lie in [0, 1), got " + to_string(k));
    }
    if (n < 0) {
        throw std::invalid_argument("iteration index must be nonnegative");
    }
    if (d0 < 0) {
        throw std::invalid_argument("initial gap must be nonnegative");
    }
    return rational_pow(k, static_cast<unsigned long>(n)) * d0 / (Rational(1) - k);
}

bool FixedPointSet::contains(std::string_view label) const {
    return std::find(points.begin(), points.end(), label) != points.end();
}

FixedPointSet fixed_points(const SelfMap& map) {
    FixedPointSet set;
    for (int i = 0; i < map.carrier().size(); ++i) {
        if (map.apply(i) == i) set.points.push_back(map.carrier().label(i));
    }
    return set;
}

UniquenessReport uniqueness_by_paths(const FiniteDistanceSpace& space,
                                     const FiniteRelation& relation, const SelfMap& map,
                                     const FixedPointSet& fixedPoints, const Rational& k) {
    if (space.carrier() != relation.carrier() || space.carrier() != map.carrier()) {
        throw InstanceError("space, relation and map live on different carriers");
    }
    if (k < 0 || k >= 1) {
        throw std::domain_error("contraction constant must lie in [0, 1), got " + to_string(k));
    }

    UniquenessReport report;
    if (fixedPoints.points.size() <= 1) {
        report.note = "fixed-point set has at most one element";
        return report;
    }
    report.unique = false;

    const FiniteRelation symmetric = symmetrize(relation);
    for (size_t a = 0; a < fixedPoints.points.size(); ++a) {
        for (size_t b = a + 1; b < fixedPoints.points.size(); ++b) {
            const auto& p = fixedPoints.points[a];
            const auto& q = fixedPoints.points[b];
            if (find_path(symmetric, p, q)) {
                if (!report.connectedDistinctPair) {
                    report.connectedDistinctPair = PointPair{p, q};
                }
            } else if (!report.unreachablePair) {
                report.unreachablePair = PointPair{p, q};
            }
        }
    }
    if (report.connectedDistinctPair) {
        report.note = "internal-consistency alarm: distinct fixed points '" +
                      report.connectedDistinctPair->first + "' and '" +
                      report.connectedDistinctPair->second +
                      "' are joined by a path although the contraction holds with k = " +
                      to_string(k);
    } else {
        report.note = "multiple fixed points, none joined by a path in the symmetrized relation";
    }
    return report;
}

} // namespace relfix
