#include "thetalab/face.hpp"

#include <algorithm>
#include <iterator>

#include "thetalab/errors.hpp"

namespace thetalab {

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw MalformedFace("face has a repeated vertex");
}

Face Face::from_sorted(std::vector<Vertex> vertices) {
    Face f;
    f.vertices_ = std::move(vertices);
    return f;
}

bool Face::contains(Vertex v) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const noexcept {
    if (size() > other.size()) return false;
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

Face Face::with(Vertex v) const {
    std::vector<Vertex> out(vertices_);
    auto it = std::lower_bound(out.begin(), out.end(), v);
    if (it != out.end() && *it == v) return *this;
    out.insert(it, v);
    return from_sorted(std::move(out));
}

Face Face::without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex w : vertices_)
        if (w != v) out.push_back(w);
    return from_sorted(std::move(out));
}

Face Face::unite(const Face& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::intersect(const Face& other) const {
    std::vector<Vertex> out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                          other.vertices_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::minus(const Face& other) const {
    std::vector<Vertex> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : f) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h ^ f.size();
}

std::vector<Face> subfaces_of_size(const Face& face, std::size_t k) {
    std::vector<Face> out;
    const std::size_t n = face.size();
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> vs(k);
        for (std::size_t i = 0; i < k; ++i) vs[i] = face[idx[i]];
        out.push_back(Face::from_sorted(std::move(vs)));
        // advance to the next k-combination
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Face> all_subfaces(const Face& face) {
    std::vector<Face> out;
    for (std::size_t k = 0; k <= face.size(); ++k) {
        auto layer = subfaces_of_size(face, k);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

}  // namespace thetalab
