#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "relfix/validator.hpp"

namespace relfix::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // inclusive bounds
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(int percent) { return uniform(1, 100) <= percent; }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

Carrier numbered_carrier(int n);

/// Arbitrary symmetric nonnegative table over a small rational grid; no
/// axiom is enforced. Feed for the hierarchy and witness-soundness laws.
FiniteDistanceSpace random_any_table(Rng& rng, int n);

/// dist(x, y) = g(x) + g(y) with at most one g-value zero: always
/// metric-like, self-distances typically positive.
FiniteDistanceSpace random_metric_like(Rng& rng, int n);

/// dist(x, y) = max(h(x), h(y)) with distinct positive h: a partial metric
/// that is not a metric.
FiniteDistanceSpace random_partial_metric(Rng& rng, int n);

/// Shortest-path closure of a random positive table with zero diagonal.
FiniteDistanceSpace random_metric(Rng& rng, int n);

FiniteRelation random_relation(Rng& rng, const Carrier& carrier, int densityPercent);
SelfMap random_map(Rng& rng, const Carrier& carrier);

/// Relation closed under the map containing every seed pair: the closure of
/// the seeds under (x, y) -> (fx, fy).
FiniteRelation map_closure(const SelfMap& map, const Carrier& carrier,
                           const std::vector<PointPair>& seeds);

/// Instance with a feasible contraction along a relation that is closed
/// under the map and admits the recorded start point: distances are
/// g-sums with g strictly decreasing along orbits into a g = 0 sink, so
/// every related ratio is strictly below 1.
Instance feasible_contraction_instance(Rng& rng);

} // namespace relfix::testing
