#include "relfix/carrier.hpp"

#include "relfix/error.hpp"

namespace relfix {

Carrier Carrier::create(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw InstanceError("carrier must contain at least one point");
    }
    Carrier carrier;
    carrier.labels_ = std::move(labels);
    for (int i = 0; i < static_cast<int>(carrier.labels_.size()); ++i) {
        const auto& label = carrier.labels_[static_cast<size_t>(i)];
        if (label.empty()) {
            throw InstanceError("point labels must be nonempty");
        }
        if (!carrier.index_.emplace(label, i).second) {
            throw InstanceError("duplicate point label '" + label + "'");
        }
    }
    return carrier;
}

std::optional<int> Carrier::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Carrier::at(std::string_view label) const {
    auto index = find(label);
    if (!index) {
        throw InstanceError("unknown point label '" + std::string(label) + "'");
    }
    return *index;
}

} // namespace relfix
