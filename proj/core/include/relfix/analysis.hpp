#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relfix/relation.hpp"
#include "relfix/space.hpp"

namespace relfix {

/// Asymptotic data of an infinite relation-preserving sequence over a
/// finite carrier.
///
/// Such a sequence eventually stays inside, and visits infinitely often
/// exactly, some set S whose induced subdigraph is strongly connected
/// (with a self-loop when |S| = 1); conversely every such S is realized by
/// walking a closed walk that covers it. Finite prefixes never affect
/// limits or Cauchy behaviour, so S carries everything the sequence-level
/// definitions quantify over:
///   - the pairwise distance limit exists iff dist is constant on S x S
///     (diagonal included), in which case cauchyValue holds that constant;
///   - the sequence converges to x iff dist(s, x) = dist(x, x) for every
///     s in S (see limits_of_tail).
struct TailSet {
    std::vector<std::string> members; // nonempty, carrier order
    std::optional<Rational> cauchyValue;
};

struct PropertyWitness {
    TailSet tail;
    std::optional<std::string> limitPoint; // the limit the failure is about, if any
};

struct PropertyReport {
    bool holds = true;
    std::optional<PropertyWitness> witness;
};

/// Points x with dist(s, x) = dist(x, x) for every s in `tail` -- the
/// topological limits of any sequence whose infinitely-visited set is
/// `tail`. Limits need not be unique in dislocated spaces, so the result
/// may have several members (or none).
std::vector<std::string> limits_of_tail(const FiniteDistanceSpace& space,
                                        std::span<const std::string> tail);

/// All tail sets inside Y realizable by relation-preserving sequences,
/// annotated with their Cauchy constant when one exists. Sorted by size,
/// then by carrier order of members.
std::vector<TailSet> realizable_tail_sets(const FiniteDistanceSpace& space,
                                          const FiniteRelation& relation,
                                          std::span<const std::string> Y);

/// Every relation-preserving Cauchy sequence in Y has a limit y in Y whose
/// self-distance equals the Cauchy constant. Decided through the tail-set
/// reduction above.
PropertyReport check_r_completeness(const FiniteDistanceSpace& space,
                                    const FiniteRelation& relation,
                                    std::span<const std::string> Y);

/// Every convergent relation-preserving sequence in Y admits, for each of
/// its limits x, a subsequence related to x (in either direction). The
/// subsequence exists iff some infinitely-visited point is related to x.
PropertyReport check_sigma_self_closed(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       std::span<const std::string> Y);

/// f maps every convergent relation-preserving sequence onto a sequence
/// converging to the image of each limit.
PropertyReport check_r_continuity_like(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       const SelfMap& map);

/// Same with the universal relation: every nonempty subset is a tail.
PropertyReport check_continuity_like(const FiniteDistanceSpace& space, const SelfMap& map);

struct WalkOptions {
    int count = 100;
    int horizon = 120;
    std::uint64_t seed = 0;
};

/// One simulated relation-preserving walk with its empirical verdicts.
/// `stableTail` is the point set visited in the final third of the walk;
/// once the walk has settled into a strongly connected component this
/// equals its true tail set.
struct WalkRecord {
    std::vector<std::string> points;
    bool stuck = false; // ran out of successors before the horizon
    std::vector<std::string> stableTail;
    std::optional<Rational> cauchyValue;
    std::vector<std::string> limits;
};

/// Randomized oracle: `count` walks inside Y, uniform among available
/// successors, deterministic under a fixed seed.
std::vector<WalkRecord> simulate_walks(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       std::span<const std::string> Y,
                                       const WalkOptions& options);

} // namespace relfix
