#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relfix/carrier.hpp"

namespace relfix {

using PointPair = std::pair<std::string, std::string>;

/// Outcome of a decidable property together with a counterexample when it
/// fails. `witness` is empty exactly when `holds` is true.
template <typename Witness>
struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;
};

/// Binary relation on a carrier, stored as an adjacency matrix. Set
/// semantics: duplicate input pairs collapse.
class FiniteRelation {
public:
    static FiniteRelation create(Carrier carrier, const std::vector<PointPair>& pairs);
    static FiniteRelation empty(Carrier carrier);
    static FiniteRelation universal(Carrier carrier);
    static FiniteRelation diagonal(Carrier carrier);

    const Carrier& carrier() const { return carrier_; }

    bool contains(int i, int j) const {
        return adjacency_[static_cast<size_t>(i) * static_cast<size_t>(carrier_.size()) +
                          static_cast<size_t>(j)] != 0;
    }
    bool contains(std::string_view x, std::string_view y) const;

    /// Ordered pairs in carrier order (row-major).
    std::vector<PointPair> pairs() const;
    int pair_count() const;
    bool is_empty() const { return pair_count() == 0; }

    /// Relation restricted to subset x subset.
    FiniteRelation restricted_to(std::span<const std::string> subset) const;

    bool operator==(const FiniteRelation& other) const {
        return carrier_ == other.carrier_ && adjacency_ == other.adjacency_;
    }

private:
    FiniteRelation(Carrier carrier, std::vector<unsigned char> adjacency);

    Carrier carrier_;
    std::vector<unsigned char> adjacency_;

    friend FiniteRelation symmetrize(const FiniteRelation&);
};

/// Total self-map on the carrier.
class SelfMap {
public:
    static SelfMap create(Carrier carrier, const std::vector<PointPair>& assignments);
    static SelfMap identity(Carrier carrier);

    const Carrier& carrier() const { return carrier_; }
    int apply(int i) const { return image_[static_cast<size_t>(i)]; }
    const std::string& apply(std::string_view label) const;

    /// Indices of f(X), sorted in carrier order, duplicates removed.
    std::vector<int> image_points() const;
    std::vector<std::string> image_labels() const;

private:
    SelfMap(Carrier carrier, std::vector<int> image);

    Carrier carrier_;
    std::vector<int> image_;
};

/// Finite chain x = z_0, z_1, ..., z_l = y with every consecutive pair in
/// the queried relation. Length l = nodes.size() - 1 is at least 1; the
/// endpoints of a one-node query are joined through a cycle, never by the
/// trivial chain.
struct Path {
    std::vector<std::string> nodes;
    int length() const { return static_cast<int>(nodes.size()) - 1; }
};

/// R united with its converse.
FiniteRelation symmetrize(const FiniteRelation& relation);

/// Every pair x, y in `subset` (x == y included) is related one way or the
/// other. Witness: first uncovered pair in carrier order.
Verdict<PointPair> is_complete(const FiniteRelation& relation,
                               std::span<const std::string> subset);

struct MapViolation {
    PointPair source; // related pair whose image escapes the relation
    PointPair image;
};

/// (fx, fy) stays in the relation whenever (x, y) is in it.
Verdict<MapViolation> is_f_closed(const FiniteRelation& relation, const SelfMap& map);

/// Every pair in `subset` has a common successor somewhere in the carrier.
Verdict<PointPair> is_directed(const FiniteRelation& relation,
                               std::span<const std::string> subset);

/// Shortest chain of length >= 1 from `from` to `to` (breadth-first,
/// neighbours expanded in carrier order). Empty when unreachable.
std::optional<Path> find_path(const FiniteRelation& relation,
                              std::string_view from, std::string_view to);

/// Every consecutive pair of `sequence` is in the relation.
bool is_preserving(const FiniteRelation& relation, std::span<const std::string> sequence);

} // namespace relfix
