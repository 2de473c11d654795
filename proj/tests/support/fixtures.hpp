#pragma once

#include <vector>

#include "relfix/validator.hpp"

namespace relfix::testing {

// The two worked tables: a three-point metric-like space that is not a
// partial metric, and a partial metric that is not a metric.
FiniteDistanceSpace example1_sigma();
FiniteDistanceSpace example1_p();

// Three points with the small contraction toward b, the relation
// {(a,a),(b,b),(a,b)} and Y = {a,b}.
FiniteDistanceSpace example2_space();
FiniteRelation example2_relation();
SelfMap example2_map();
Instance example2_instance();
Instance example2_universal_instance();

// Two limits for the constant sequence at a: dist(a,b) = dist(b,b).
Instance nonunique_limits_instance();

// Continuity counterexample: the tail {a} converges to both a and b while
// the images dist(f a, f b) and dist(f b, f b) disagree.
Instance continuity_fail_instance();

// Self-closedness counterexample: limit b of the tail {a} is unrelated to a.
Instance self_closed_fail_instance();

Instance two_cycle_instance();
Instance identity_diagonal_instance();

// Everything above, for corpus-wide sweeps.
std::vector<Instance> fixture_corpus();

} // namespace relfix::testing
