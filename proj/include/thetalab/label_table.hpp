#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "thetalab/face.hpp"

namespace thetalab {

/// Bijection between vertex labels and dense vertex ids 0..size()-1.
class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(const std::vector<std::string>& labels);

    /// Returns the id of `label`, registering it if it is new.
    Vertex intern(std::string_view label);
    [[nodiscard]] std::optional<Vertex> find(std::string_view label) const;
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_.at(v); }
    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const LabelTable& a, const LabelTable& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> ids_;
};

}  // namespace thetalab
