#include "thetalab/generators.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {
namespace {

LabelTablePtr table_of(const std::vector<std::string>& labels) {
    return std::make_shared<LabelTable>(labels);
}

Face range_face(std::size_t n) {
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
    return Face::from_sorted(std::move(vs));
}

}  // namespace

std::vector<std::string> letters(int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        if (i < 26) {
            out.emplace_back(1, static_cast<char>('a' + i));
        } else {
            out.push_back("v" + std::to_string(i));
        }
    }
    return out;
}

SimplicialComplex simplex(const std::vector<std::string>& labels) {
    return SimplicialComplex::from_facets({range_face(labels.size())}, table_of(labels));
}

SimplicialComplex boundary_simplex(const std::vector<std::string>& labels) {
    auto table = table_of(labels);
    if (labels.empty()) return SimplicialComplex::void_complex(table);
    const Face all = range_face(labels.size());
    std::vector<Face> facets;
    for (Vertex v : all) facets.push_back(all.without(v));
    return SimplicialComplex::from_facets(std::move(facets), table);
}

SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 0) throw PreconditionError("cross-polytope dimension must be >= 0");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) {
        labels.push_back("+" + std::to_string(i));
        labels.push_back("-" + std::to_string(i));
    }
    std::vector<Face> facets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> vs;
        for (int i = 0; i < n; ++i) vs.push_back(static_cast<Vertex>(2 * i + ((mask >> i) & 1u)));
        facets.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(std::move(facets), table_of(labels));
}

SimplicialComplex path(int k) {
    if (k < 0) throw PreconditionError("path length must be >= 0");
    std::vector<std::string> labels;
    for (int i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
    std::vector<Face> facets;
    if (k == 0) facets.push_back(Face{0});
    for (int i = 0; i < k; ++i) facets.push_back(Face{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return SimplicialComplex::from_facets(std::move(facets), table_of(labels));
}

SimplicialComplex cycle(int k) {
    if (k < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    std::vector<Face> facets;
    for (int i = 0; i < k; ++i)
        facets.push_back(Face{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k)});
    return SimplicialComplex::from_facets(std::move(facets), table_of(labels));
}

SimplicialComplex twin_stellar_ball() {
    auto glued = SimplicialComplex::from_labelled({{"a", "b", "c", "d"}, {"b", "c", "d", "e"}});
    const Face first = glued.face_from_labels({"a", "b", "c", "d"});
    auto once = stellar(glued, first, "u").total();
    const Face second = once.face_from_labels({"b", "c", "d", "e"});
    return stellar(once, second, "v").total();
}

SimplicialComplex glued_octahedra_ball() {
    auto octahedron = [](const std::string& suffix) {
        std::vector<std::vector<std::string>> facets;
        const std::string shared[3] = {"a", "b", "c"};
        for (unsigned mask = 0; mask < 8; ++mask) {
            std::vector<std::string> f;
            for (int i = 0; i < 3; ++i) f.push_back((mask >> i) & 1u ? shared[i] + suffix : shared[i]);
            facets.push_back(std::move(f));
        }
        return SimplicialComplex::from_labelled(facets);
    };
    return unite(cone(octahedron("1"), "u1"), cone(octahedron("2"), "u2"));
}

}  // namespace thetalab
