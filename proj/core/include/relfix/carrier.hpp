#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relfix {

/// Ordered set of distinct point labels shared by a distance table, a
/// relation and a self-map. Label order is significant: witnesses, path
/// tie-breaking and serialized output all follow it.
class Carrier {
public:
    static Carrier create(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_.at(static_cast<size_t>(index)); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(std::string_view label) const;
    /// Like find(), but throws InstanceError for unknown labels.
    int at(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }

    bool operator==(const Carrier& other) const { return labels_ == other.labels_; }
    bool operator!=(const Carrier& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

} // namespace relfix
