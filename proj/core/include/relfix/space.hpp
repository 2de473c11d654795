#pragma once

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "relfix/carrier.hpp"
#include "relfix/rational.hpp"

namespace relfix {

/// Strict hierarchy of axiom systems a finite distance table can satisfy.
/// Metric is the strongest class, NotMetricLike means even the dislocated
/// axioms fail.
enum class SpaceClass { Metric, PartialMetric, MetricLike, NotMetricLike };

std::string_view to_string(SpaceClass cls);

enum class AxiomId {
    SigmaZeroDistance, // zero distance between distinct points
    SigmaTriangle,     // plain triangle inequality
    PartialIndistancy, // distinct points indistinguishable at distance zero
    PartialSmallSelf,  // self-distance exceeding a cross distance
    PartialTriangle,   // triangle inequality with self-distance subtracted
    MetricSelfDistance // nonzero self-distance
};

std::string_view to_string(AxiomId axiom);

/// One concrete counterexample. `witness` holds the point tuple in the order
/// the axiom quantifies it; for triangle-style axioms that is (x, z, y) with
/// lhs = dist(x, y) and rhs the right-hand side evaluated through z.
struct AxiomViolation {
    AxiomId axiom;
    std::vector<std::string> witness;
    Rational lhs;
    Rational rhs;
};

/// Exhaustive violation listing; `satisfied` iff `violations` is empty.
struct AxiomReport {
    bool satisfied = true;
    std::vector<AxiomViolation> violations;
};

/// Finite symmetric table of nonnegative exact distances. Symmetry and
/// nonnegativity are construction preconditions, not classification
/// outcomes: an asymmetric table is rejected with InstanceError.
class FiniteDistanceSpace {
public:
    /// `table` is row-major, size n*n, symmetric, nonnegative.
    static FiniteDistanceSpace from_table(Carrier carrier, std::vector<Rational> table);

    /// Sparse entries (x, y, value) with symmetric completion: listing
    /// (x, y) also covers (y, x). Every pair (diagonal included) must be
    /// covered; conflicting duplicates are rejected. With `strict` every
    /// ordered pair must be listed explicitly.
    static FiniteDistanceSpace from_entries(
        Carrier carrier,
        const std::vector<std::tuple<std::string, std::string, Rational>>& entries,
        bool strict = false);

    const Carrier& carrier() const { return carrier_; }
    int size() const { return carrier_.size(); }

    const Rational& dist(int i, int j) const {
        return table_[static_cast<size_t>(i) * static_cast<size_t>(carrier_.size()) +
                      static_cast<size_t>(j)];
    }
    const Rational& dist(std::string_view x, std::string_view y) const;

private:
    FiniteDistanceSpace(Carrier carrier, std::vector<Rational> table);

    Carrier carrier_;
    std::vector<Rational> table_;
};

/// Dislocated-space axioms: no zero distance between distinct points and
/// the triangle inequality. Symmetry holds by construction.
AxiomReport check_metric_like(const FiniteDistanceSpace& space);

/// Partial-metric axioms: indistancy biconditional, small self-distance,
/// and the triangle inequality with the middle self-distance subtracted.
AxiomReport check_partial_metric(const FiniteDistanceSpace& space);

/// Partial-metric axioms plus zero self-distance everywhere.
AxiomReport check_metric(const FiniteDistanceSpace& space);

/// Strongest class whose axioms all hold.
SpaceClass classify(const FiniteDistanceSpace& space);

} // namespace relfix
