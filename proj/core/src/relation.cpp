#include "relfix/relation.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "relfix/error.hpp"

namespace relfix {

namespace {

// Resolves subset labels to indices, rejecting strangers; keeps carrier order.
std::vector<int> subset_indices(const Carrier& carrier, std::span<const std::string> subset) {
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

} // namespace

FiniteRelation::FiniteRelation(Carrier carrier, std::vector<unsigned char> adjacency)
    : carrier_(std::move(carrier)), adjacency_(std::move(adjacency)) {}

FiniteRelation FiniteRelation::create(Carrier carrier, const std::vector<PointPair>& pairs) {
    const size_t n = static_cast<size_t>(carrier.size());
    std::vector<unsigned char> adjacency(n * n, 0);
    for (const auto& [x, y] : pairs) {
        adjacency[static_cast<size_t>(carrier.at(x)) * n + static_cast<size_t>(carrier.at(y))] = 1;
    }
    return FiniteRelation(std::move(carrier), std::move(adjacency));
}

FiniteRelation FiniteRelation::empty(Carrier carrier) {
    const size_t n = static_cast<size_t>(carrier.size());
    return FiniteRelation(std::move(carrier), std::vector<unsigned char>(n * n, 0));
}

FiniteRelation FiniteRelation::universal(Carrier carrier) {
    const size_t n = static_cast<size_t>(carrier.size());
    return FiniteRelation(std::move(carrier), std::vector<unsigned char>(n * n, 1));
}

FiniteRelation FiniteRelation::diagonal(Carrier carrier) {
    const size_t n = static_cast<size_t>(carrier.size());
    std::vector<unsigned char> adjacency(n * n, 0);
    for (size_t i = 0; i < n; ++i) adjacency[i * n + i] = 1;
    return FiniteRelation(std::move(carrier), std::move(adjacency));
}

bool FiniteRelation::contains(std::string_view x, std::string_view y) const {
    return contains(carrier_.at(x), carrier_.at(y));
}

std::vector<PointPair> FiniteRelation::pairs() const {
    std::vector<PointPair> result;
    for (int i = 0; i < carrier_.size(); ++i) {
        for (int j = 0; j < carrier_.size(); ++j) {
            if (contains(i, j)) result.emplace_back(carrier_.label(i), carrier_.label(j));
        }
    }
    return result;
}

int FiniteRelation::pair_count() const {
    int count = 0;
    for (unsigned char bit : adjacency_) count += bit;
    return count;
}

FiniteRelation FiniteRelation::restricted_to(std::span<const std::string> subset) const {
    const auto indices = subset_indices(carrier_, subset);
    std::vector<char> member(static_cast<size_t>(carrier_.size()), 0);
    for (int i : indices) member[static_cast<size_t>(i)] = 1;

    const size_t n = static_cast<size_t>(carrier_.size());
    std::vector<unsigned char> adjacency(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (!member[i]) continue;
        for (size_t j = 0; j < n; ++j) {
            if (member[j] && adjacency_[i * n + j]) adjacency[i * n + j] = 1;
        }
    }
    return FiniteRelation(carrier_, std::move(adjacency));
}

SelfMap::SelfMap(Carrier carrier, std::vector<int> image)
    : carrier_(std::move(carrier)), image_(std::move(image)) {}

SelfMap SelfMap::create(Carrier carrier, const std::vector<PointPair>& assignments) {
    std::vector<int> image(static_cast<size_t>(carrier.size()), -1);
    for (const auto& [from, to] : assignments) {
        const int i = carrier.at(from);
        if (image[static_cast<size_t>(i)] != -1) {
            throw InstanceError("point '" + from + "' mapped twice");
        }
        image[static_cast<size_t>(i)] = carrier.at(to);
    }
    for (int i = 0; i < carrier.size(); ++i) {
        if (image[static_cast<size_t>(i)] == -1) {
            throw InstanceError("map is not total: '" + carrier.label(i) + "' has no image");
        }
    }
    return SelfMap(std::move(carrier), std::move(image));
}

SelfMap SelfMap::identity(Carrier carrier) {
    std::vector<int> image(static_cast<size_t>(carrier.size()));
    for (int i = 0; i < carrier.size(); ++i) image[static_cast<size_t>(i)] = i;
    return SelfMap(std::move(carrier), std::move(image));
}

const std::string& SelfMap::apply(std::string_view label) const {
    return carrier_.label(apply(carrier_.at(label)));
}

std::vector<int> SelfMap::image_points() const {
    std::vector<char> seen(static_cast<size_t>(carrier_.size()), 0);
    for (int value : image_) seen[static_cast<size_t>(value)] = 1;
    std::vector<int> points;
    for (int i = 0; i < carrier_.size(); ++i) {
        if (seen[static_cast<size_t>(i)]) points.push_back(i);
    }
    return points;
}

std::vector<std::string> SelfMap::image_labels() const {
    std::vector<std::string> labels;
    for (int i : image_points()) labels.push_back(carrier_.label(i));
    return labels;
}

FiniteRelation symmetrize(const FiniteRelation& relation) {
    const size_t n = static_cast<size_t>(relation.carrier_.size());
    std::vector<unsigned char> adjacency = relation.adjacency_;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (relation.adjacency_[i * n + j]) adjacency[j * n + i] = 1;
        }
    }
    return FiniteRelation(relation.carrier_, std::move(adjacency));
}

Verdict<PointPair> is_complete(const FiniteRelation& relation,
                               std::span<const std::string> subset) {
    const auto indices = subset_indices(relation.carrier(), subset);
    for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = a; b < indices.size(); ++b) {
            const int i = indices[a];
            const int j = indices[b];
            if (!relation.contains(i, j) && !relation.contains(j, i)) {
                return {false, PointPair{relation.carrier().label(i), relation.carrier().label(j)}};
            }
        }
    }
    return {};
}

Verdict<MapViolation> is_f_closed(const FiniteRelation& relation, const SelfMap& map) {
    if (relation.carrier() != map.carrier()) {
        throw InstanceError("relation and map live on different carriers");
    }
    const auto& carrier = relation.carrier();
    for (int i = 0; i < carrier.size(); ++i) {
        for (int j = 0; j < carrier.size(); ++j) {
            if (!relation.contains(i, j)) continue;
            const int fi = map.apply(i);
            const int fj = map.apply(j);
            if (!relation.contains(fi, fj)) {
                return {false,
                        MapViolation{{carrier.label(i), carrier.label(j)},
                                     {carrier.label(fi), carrier.label(fj)}}};
            }
        }
    }
    return {};
}

Verdict<PointPair> is_directed(const FiniteRelation& relation,
                               std::span<const std::string> subset) {
    const auto indices = subset_indices(relation.carrier(), subset);
    const auto& carrier = relation.carrier();
    for (size_t a = 0; a < indices.size(); ++a) {
        for (size_t b = a; b < indices.size(); ++b) {
            const int i = indices[a];
            const int j = indices[b];
            bool found = false;
            for (int z = 0; z < carrier.size() && !found; ++z) {
                found = relation.contains(i, z) && relation.contains(j, z);
            }
            if (!found) {
                return {false, PointPair{carrier.label(i), carrier.label(j)}};
            }
        }
    }
    return {};
}

std::optional<Path> find_path(const FiniteRelation& relation,
                              std::string_view from, std::string_view to) {
    const auto& carrier = relation.carrier();
    const int source = carrier.at(from);
    const int target = carrier.at(to);
    const int n = carrier.size();

    // Breadth-first over chains with at least one edge: seeding with the
    // successors of the source (not the source itself) makes the one-node
    // query look for a shortest cycle instead of the empty chain.
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v) {
        if (relation.contains(source, v) && !seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            parent[static_cast<size_t>(v)] = source;
            queue.push_back(v);
        }
    }
    bool reached = false;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == target) {
            reached = true;
            break;
        }
        for (int v = 0; v < n; ++v) {
            if (relation.contains(u, v) && !seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                parent[static_cast<size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    if (!reached) return std::nullopt;

    std::vector<int> reversed;
    int cursor = target;
    reversed.push_back(cursor);
    while (!(cursor == source && reversed.size() >= 2)) {
        cursor = parent[static_cast<size_t>(cursor)];
        reversed.push_back(cursor);
    }
    Path path;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
        path.nodes.push_back(carrier.label(*it));
    }
    return path;
}

bool is_preserving(const FiniteRelation& relation, std::span<const std::string> sequence) {
    if (sequence.empty()) {
        throw InstanceError("sequence must be nonempty");
    }
    for (size_t i = 0; i + 1 < sequence.size(); ++i) {
        if (!relation.contains(sequence[i], sequence[i + 1])) return false;
    }
    return true;
}

} // namespace relfix
