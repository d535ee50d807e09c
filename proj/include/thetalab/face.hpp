#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace thetalab {

using Vertex = std::uint32_t;

/// A face of a simplicial complex: a strictly increasing sequence of vertex
/// ids. The default-constructed face is the empty face.
class Face {
public:
    Face() = default;
    Face(std::initializer_list<Vertex> vertices);
    /// Sorts the input; throws MalformedFace on a repeated vertex.
    explicit Face(std::vector<Vertex> vertices);

    /// Wraps an already strictly increasing sequence without re-sorting.
    static Face from_sorted(std::vector<Vertex> vertices);

    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return vertices_.empty(); }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    [[nodiscard]] auto begin() const noexcept { return vertices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return vertices_.end(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }
    [[nodiscard]] Vertex back() const { return vertices_.back(); }
    [[nodiscard]] std::span<const Vertex> vertices() const noexcept { return vertices_; }

    [[nodiscard]] bool contains(Vertex v) const noexcept;
    [[nodiscard]] bool is_subset_of(const Face& other) const noexcept;

    [[nodiscard]] Face with(Vertex v) const;
    [[nodiscard]] Face without(Vertex v) const;
    [[nodiscard]] Face unite(const Face& other) const;
    [[nodiscard]] Face intersect(const Face& other) const;
    [[nodiscard]] Face minus(const Face& other) const;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;

private:
    std::vector<Vertex> vertices_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

/// Every subset of `face` (including the empty face and `face` itself), in
/// order of increasing size.
std::vector<Face> all_subfaces(const Face& face);

/// Every subset of `face` of the given cardinality, lexicographically ordered.
std::vector<Face> subfaces_of_size(const Face& face, std::size_t k);

}  // namespace thetalab
