#include "relfix/analysis.hpp"

#include <algorithm>
#include <random>

#include "relfix/error.hpp"

namespace relfix {

namespace {

constexpr int kMaxCarrierForSubsetEnumeration = 63;

std::vector<int> resolve_subset(const Carrier& carrier, std::span<const std::string> subset) {
    std::vector<char> member(static_cast<size_t>(carrier.size()), 0);
    for (const auto& label : subset) {
        member[static_cast<size_t>(carrier.at(label))] = 1;
    }
    std::vector<int> indices;
    for (int i = 0; i < carrier.size(); ++i) {
        if (member[static_cast<size_t>(i)]) indices.push_back(i);
    }
    return indices;
}

// Strong connectivity of the subdigraph induced on `mask` (forward and
// backward reach from its lowest member); singletons need a self-loop.
bool induced_strongly_connected(const FiniteRelation& relation, std::uint64_t mask) {
    std::vector<int> members;
    for (int i = 0; i < relation.carrier().size(); ++i) {
        if (mask >> i & 1u) members.push_back(i);
    }
    if (members.size() == 1) {
        return relation.contains(members[0], members[0]);
    }
    auto reaches_all = [&](bool forward) {
        std::uint64_t seen = 1ull << members[0];
        std::vector<int> stack{members[0]};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : members) {
                if (seen >> v & 1u) continue;
                const bool edge = forward ? relation.contains(u, v) : relation.contains(v, u);
                if (edge) {
                    seen |= 1ull << v;
                    stack.push_back(v);
                }
            }
        }
        return seen == mask;
    };
    return reaches_all(true) && reaches_all(false);
}

std::optional<Rational> constant_distance_on(const FiniteDistanceSpace& space,
                                             const std::vector<int>& members) {
    const Rational& first = space.dist(members[0], members[0]);
    for (int a : members) {
        for (int b : members) {
            if (space.dist(a, b) != first) return std::nullopt;
        }
    }
    return first;
}

std::vector<int> limit_indices(const FiniteDistanceSpace& space, const std::vector<int>& tail) {
    std::vector<int> limits;
    for (int x = 0; x < space.size(); ++x) {
        bool isLimit = true;
        for (int s : tail) {
            if (space.dist(s, x) != space.dist(x, x)) {
                isLimit = false;
                break;
            }
        }
        if (isLimit) limits.push_back(x);
    }
    return limits;
}

std::vector<std::string> to_labels(const Carrier& carrier, const std::vector<int>& indices) {
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (int i : indices) labels.push_back(carrier.label(i));
    return labels;
}

struct TailData {
    std::vector<int> members;
    std::optional<Rational> cauchyValue;
};

std::vector<TailData> tail_data(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                                std::span<const std::string> Y) {
    if (space.carrier() != relation.carrier()) {
        throw InstanceError("space and relation live on different carriers");
    }
    if (space.size() > kMaxCarrierForSubsetEnumeration) {
        throw InstanceError("carrier too large for tail-set enumeration");
    }
    const auto yIndices = resolve_subset(space.carrier(), Y);
    std::uint64_t yMask = 0;
    for (int i : yIndices) yMask |= 1ull << i;

    std::vector<TailData> tails;
    for (std::uint64_t sub = yMask; sub != 0; sub = (sub - 1) & yMask) {
        if (!induced_strongly_connected(relation, sub)) continue;
        TailData data;
        for (int i = 0; i < space.size(); ++i) {
            if (sub >> i & 1u) data.members.push_back(i);
        }
        data.cauchyValue = constant_distance_on(space, data.members);
        tails.push_back(std::move(data));
    }
    std::sort(tails.begin(), tails.end(), [](const TailData& a, const TailData& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return tails;
}

TailSet to_tail_set(const Carrier& carrier, const TailData& data) {
    return TailSet{to_labels(carrier, data.members), data.cauchyValue};
}

} // namespace

std::vector<std::string> limits_of_tail(const FiniteDistanceSpace& space,
                                        std::span<const std::string> tail) {
    if (tail.empty()) {
        throw InstanceError("tail set must be nonempty");
    }
    const auto indices = resolve_subset(space.carrier(), tail);
    return to_labels(space.carrier(), limit_indices(space, indices));
}

std::vector<TailSet> realizable_tail_sets(const FiniteDistanceSpace& space,
                                          const FiniteRelation& relation,
                                          std::span<const std::string> Y) {
    std::vector<TailSet> result;
    for (const auto& data : tail_data(space, relation, Y)) {
        result.push_back(to_tail_set(space.carrier(), data));
    }
    return result;
}

PropertyReport check_r_completeness(const FiniteDistanceSpace& space,
                                    const FiniteRelation& relation,
                                    std::span<const std::string> Y) {
    const auto yIndices = resolve_subset(space.carrier(), Y);
    for (const auto& tail : tail_data(space, relation, Y)) {
        if (!tail.cauchyValue) continue; // no Cauchy obligation
        const Rational& limit = *tail.cauchyValue;
        bool found = false;
        for (int y : yIndices) {
            if (space.dist(y, y) != limit) continue;
            bool matches = true;
            for (int s : tail.members) {
                if (space.dist(s, y) != limit) {
                    matches = false;
                    break;
                }
            }
            if (matches) {
                found = true;
                break;
            }
        }
        if (!found) {
            return {false, PropertyWitness{to_tail_set(space.carrier(), tail), std::nullopt}};
        }
    }
    return {};
}

PropertyReport check_sigma_self_closed(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       std::span<const std::string> Y) {
    for (const auto& tail : tail_data(space, relation, Y)) {
        for (int x : limit_indices(space, tail.members)) {
            bool related = false;
            for (int s : tail.members) {
                if (relation.contains(s, x) || relation.contains(x, s)) {
                    related = true;
                    break;
                }
            }
            if (!related) {
                return {false, PropertyWitness{to_tail_set(space.carrier(), tail),
                                               space.carrier().label(x)}};
            }
        }
    }
    return {};
}

PropertyReport check_r_continuity_like(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       const SelfMap& map) {
    if (space.carrier() != map.carrier()) {
        throw InstanceError("space and map live on different carriers");
    }
    for (const auto& tail : tail_data(space, relation, space.carrier().labels())) {
        for (int x : limit_indices(space, tail.members)) {
            const int fx = map.apply(x);
            for (int s : tail.members) {
                if (space.dist(map.apply(s), fx) != space.dist(fx, fx)) {
                    return {false, PropertyWitness{to_tail_set(space.carrier(), tail),
                                                   space.carrier().label(x)}};
                }
            }
        }
    }
    return {};
}

PropertyReport check_continuity_like(const FiniteDistanceSpace& space, const SelfMap& map) {
    return check_r_continuity_like(space, FiniteRelation::universal(space.carrier()), map);
}

std::vector<WalkRecord> simulate_walks(const FiniteDistanceSpace& space,
                                       const FiniteRelation& relation,
                                       std::span<const std::string> Y,
                                       const WalkOptions& options) {
    if (options.count < 1 || options.horizon < 1) {
        throw InstanceError("walk count and horizon must be at least 1");
    }
    const auto yIndices = resolve_subset(space.carrier(), Y);
    std::vector<WalkRecord> records;
    if (yIndices.empty()) return records;

    std::mt19937_64 rng(options.seed);
    auto draw = [&rng](size_t bound) { return static_cast<size_t>(rng() % bound); };

    for (int w = 0; w < options.count; ++w) {
        WalkRecord record;
        std::vector<int> walk;
        int current = yIndices[draw(yIndices.size())];
        walk.push_back(current);
        while (static_cast<int>(walk.size()) < options.horizon) {
            std::vector<int> successors;
            for (int v : yIndices) {
                if (relation.contains(current, v)) successors.push_back(v);
            }
            if (successors.empty()) {
                record.stuck = true;
                break;
            }
            current = successors[draw(successors.size())];
            walk.push_back(current);
        }

        // stabilization window: the final third of the recorded walk
        const size_t windowStart = walk.size() - std::max<size_t>(1, walk.size() / 3);
        std::vector<char> inTail(static_cast<size_t>(space.size()), 0);
        for (size_t i = windowStart; i < walk.size(); ++i) {
            inTail[static_cast<size_t>(walk[i])] = 1;
        }
        std::vector<int> tail;
        for (int i = 0; i < space.size(); ++i) {
            if (inTail[static_cast<size_t>(i)]) tail.push_back(i);
        }

        record.points = to_labels(space.carrier(), walk);
        record.stableTail = to_labels(space.carrier(), tail);
        record.cauchyValue = constant_distance_on(space, tail);
        record.limits = to_labels(space.carrier(), limit_indices(space, tail));
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace relfix
