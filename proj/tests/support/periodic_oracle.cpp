#include "periodic_oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace relfix::testing {

namespace {

std::vector<int> allowed_indices(const Carrier& carrier, std::span<const std::string> allowed) {
    std::vector<char> member(static_cast<size_t>(carrier.size()), 0);
    for (const auto& label : allowed) member[static_cast<size_t>(carrier.at(label))] = 1;
    std::vector<int> indices;
    for (int i = 0; i < carrier.size(); ++i) {
        if (member[static_cast<size_t>(i)]) indices.push_back(i);
    }
    return indices;
}

void extend_walk(const FiniteRelation& relation, const std::vector<int>& allowed,
                 std::vector<int>& walk, int maxPeriod,
                 std::vector<std::vector<int>>& out) {
    const int last = walk.back();
    if (relation.contains(last, walk.front())) {
        out.push_back(walk);
    }
    if (static_cast<int>(walk.size()) == maxPeriod) return;
    for (int next : allowed) {
        if (!relation.contains(last, next)) continue;
        walk.push_back(next);
        extend_walk(relation, allowed, walk, maxPeriod, out);
        walk.pop_back();
    }
}

// Evaluates the sequence-level definitions on the eventually periodic
// sequence whose repeating block is `cycle` (read literally off the
// realized values, one full period being enough to cover every pair the
// double limit ranges over).
std::optional<Rational> cycle_cauchy_value(const FiniteDistanceSpace& space,
                                           const std::vector<int>& cycle) {
    const Rational& first = space.dist(cycle[0], cycle[0]);
    for (int a : cycle) {
        for (int b : cycle) {
            if (space.dist(a, b) != first) return std::nullopt;
        }
    }
    return first;
}

bool cycle_converges_to(const FiniteDistanceSpace& space, const std::vector<int>& cycle, int x) {
    for (int c : cycle) {
        if (space.dist(c, x) != space.dist(x, x)) return false;
    }
    return true;
}

std::vector<int> cycle_limits(const FiniteDistanceSpace& space, const std::vector<int>& cycle) {
    std::vector<int> limits;
    for (int x = 0; x < space.size(); ++x) {
        if (cycle_converges_to(space, cycle, x)) limits.push_back(x);
    }
    return limits;
}

} // namespace

std::vector<std::vector<int>> closed_walks(const FiniteRelation& relation,
                                           std::span<const std::string> allowed, int maxPeriod) {
    const auto indices = allowed_indices(relation.carrier(), allowed);
    std::vector<std::vector<int>> walks;
    for (int start : indices) {
        std::vector<int> walk{start};
        extend_walk(relation, indices, walk, maxPeriod, walks);
    }
    return walks;
}

bool oracle_r_complete(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                       std::span<const std::string> Y, int maxPeriod) {
    const auto yIndices = allowed_indices(space.carrier(), Y);
    for (const auto& cycle : closed_walks(relation, Y, maxPeriod)) {
        const auto value = cycle_cauchy_value(space, cycle);
        if (!value) continue;
        bool served = false;
        for (int y : yIndices) {
            if (space.dist(y, y) != *value) continue;
            bool matches = true;
            for (int c : cycle) {
                if (space.dist(c, y) != *value) {
                    matches = false;
                    break;
                }
            }
            if (matches) {
                served = true;
                break;
            }
        }
        if (!served) return false;
    }
    return true;
}

bool oracle_sigma_self_closed(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                              std::span<const std::string> Y, int maxPeriod) {
    for (const auto& cycle : closed_walks(relation, Y, maxPeriod)) {
        for (int x : cycle_limits(space, cycle)) {
            bool related = false;
            for (int c : cycle) {
                if (relation.contains(c, x) || relation.contains(x, c)) {
                    related = true;
                    break;
                }
            }
            if (!related) return false;
        }
    }
    return true;
}

bool oracle_r_continuity_like(const FiniteDistanceSpace& space, const FiniteRelation& relation,
                              const SelfMap& map, int maxPeriod) {
    for (const auto& cycle : closed_walks(relation, space.carrier().labels(), maxPeriod)) {
        for (int x : cycle_limits(space, cycle)) {
            const int fx = map.apply(x);
            for (int c : cycle) {
                if (space.dist(map.apply(c), fx) != space.dist(fx, fx)) return false;
            }
        }
    }
    return true;
}

bool prefix_extension_consistent(const FiniteDistanceSpace& space,
                                 const FiniteRelation& relation,
                                 std::span<const std::string> Y, int maxPeriod, int maxPrefix) {
    const auto indices = allowed_indices(space.carrier(), Y);

    // all relation-preserving prefixes q_0 ... q_p inside Y with an edge
    // q_p -> head, p + 1 <= maxPrefix
    auto prefixes_into = [&](int head) {
        std::vector<std::vector<int>> result;
        std::vector<std::vector<int>> frontier;
        for (int start : indices) frontier.push_back({start});
        while (!frontier.empty()) {
            std::vector<int> prefix = std::move(frontier.back());
            frontier.pop_back();
            if (relation.contains(prefix.back(), head)) result.push_back(prefix);
            if (static_cast<int>(prefix.size()) == maxPrefix) continue;
            for (int next : indices) {
                if (!relation.contains(prefix.back(), next)) continue;
                auto extended = prefix;
                extended.push_back(next);
                frontier.push_back(std::move(extended));
            }
        }
        return result;
    };

    for (const auto& cycle : closed_walks(relation, Y, maxPeriod)) {
        const auto bareCauchy = cycle_cauchy_value(space, cycle);
        const auto bareLimits = cycle_limits(space, cycle);
        const std::set<int> bareVisits(cycle.begin(), cycle.end());

        for (const auto& prefix : prefixes_into(cycle.front())) {
            // realize prefix + three periods and evaluate the definitions on
            // positions past the first full period after the prefix
            std::vector<int> realized = prefix;
            for (int repeat = 0; repeat < 3; ++repeat) {
                realized.insert(realized.end(), cycle.begin(), cycle.end());
            }
            const size_t tailStart = prefix.size() + cycle.size();
            const std::vector<int> window(realized.begin() + static_cast<long>(tailStart),
                                          realized.end());

            if (cycle_cauchy_value(space, window) != bareCauchy) return false;
            if (cycle_limits(space, window) != bareLimits) return false;
            // the points visited infinitely often are the late-window values
            const std::set<int> lateVisits(window.begin(), window.end());
            if (lateVisits != bareVisits) return false;
        }
    }
    return true;
}

} // namespace relfix::testing
