#include "thetalab/label_table.hpp"

#include "thetalab/errors.hpp"

namespace thetalab {

LabelTable::LabelTable(const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        if (ids_.contains(l)) throw PreconditionError("duplicate vertex label '" + l + "'");
        intern(l);
    }
}

Vertex LabelTable::intern(std::string_view label) {
    std::string key(label);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const auto id = static_cast<Vertex>(labels_.size());
    labels_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
}

std::optional<Vertex> LabelTable::find(std::string_view label) const {
    if (auto it = ids_.find(std::string(label)); it != ids_.end()) return it->second;
    return std::nullopt;
}

}  // namespace thetalab
