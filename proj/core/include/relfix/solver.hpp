#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/rational.hpp"
#include "relfix/relation.hpp"
#include "relfix/space.hpp"

namespace relfix {

/// Orbit x0, f x0, f^2 x0, ... together with the consecutive gaps
/// dist(x_n, x_{n+1}) and, when a contraction constant was supplied, the
/// geometric tail bounds k^n * d0 / (1 - k) valid for dist(x_n, x_m), m > n.
struct PicardTrace {
    std::vector<std::string> iterates;
    std::vector<Rational> gaps;
    std::vector<Rational> bounds; // empty unless a constant was supplied
};

/// Evidence that `point` is fixed. `residual` is dist(point, f point),
/// recomputed literally; it coincides with the self-distance at a fixed
/// point and vanishes whenever the contraction hypotheses held along the
/// orbit. `preservingVerified` records that every consecutive iterate pair
/// was related (false when no relation was supplied for the run).
struct FixedPointCertificate {
    std::string point;
    Rational selfDistance;
    Rational residual;
    int iterations = 0; // applications of f needed to reach the point
    bool preservingVerified = false;
};

struct PicardOptions {
    int maxIter = 0; // 0: carrier size + 1, enough to hit a fixed point or prove a cycle
    std::optional<Rational> contractionConstant;
    const FiniteRelation* relation = nullptr; // context for preservingVerified
};

struct PicardResult {
    PicardTrace trace;
    std::optional<FixedPointCertificate> certificate; // empty: no fixed point reached
};

/// Iterates f from x0 until f(x_n) = x_n (detected exactly on the finite
/// carrier) or maxIter applications. The trace always includes the final
/// confirming application when a fixed point is found.
PicardResult picard(const FiniteDistanceSpace& space, const SelfMap& map,
                    std::string_view x0, const PicardOptions& options = {});

/// k^n * d0 / (1 - k); rejects k outside [0, 1) with std::domain_error.
Rational a_priori_bound(const Rational& k, int n, const Rational& d0);

/// F(f): every point with f(p) = p, by exhaustive enumeration.
struct FixedPointSet {
    std::vector<std::string> points; // carrier order
    bool contains(std::string_view label) const;
};

FixedPointSet fixed_points(const SelfMap& map);

/// Path-connectivity of fixed points in the symmetrized relation. Under a
/// verified contraction, two distinct fixed points joined by a path are
/// impossible; such a pair is therefore surfaced as an internal-consistency
/// alarm instead of being treated as a legitimate outcome.
struct UniquenessReport {
    bool unique = true; // |F| <= 1
    std::optional<PointPair> unreachablePair;       // distinct fixed points with no path
    std::optional<PointPair> connectedDistinctPair; // the alarm case
    std::string note;
};

UniquenessReport uniqueness_by_paths(const FiniteDistanceSpace& space,
                                     const FiniteRelation& relation, const SelfMap& map,
                                     const FixedPointSet& fixedPoints, const Rational& k);

} // namespace relfix
