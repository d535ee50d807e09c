#include "thetalab/instances.hpp"

#include <algorithm>
#include <map>

#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/homology.hpp"

namespace thetalab {
namespace {

constexpr int kMaxAttempts = 64;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Bounded draws by modulo; std distributions are not portable across
// standard libraries.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
    bool chance(unsigned percent) { return engine() % 100 < percent; }
};

// A pure complex under construction, on integer vertices.
struct Builder {
    std::vector<Face> facets;
    Vertex next = 0;

    [[nodiscard]] FaceSet faces() const {
        FaceSet out;
        for (const auto& f : facets)
            for (const auto& g : all_subfaces(f)) out.insert(g);
        return out;
    }

    [[nodiscard]] std::map<Face, int> ridge_counts() const {
        std::map<Face, int> out;
        for (const auto& f : facets)
            for (Vertex v : f) ++out[f.without(v)];
        return out;
    }

    void stellar(const Face& face) {
        const Vertex apex = next++;
        std::vector<Face> out;
        for (const auto& g : facets) {
            if (!face.is_subset_of(g)) {
                out.push_back(g);
                continue;
            }
            for (Vertex u : face) out.push_back(g.without(u).with(apex));
        }
        facets = std::move(out);
    }

    [[nodiscard]] SimplicialComplex build() const {
        std::vector<std::vector<std::string>> labelled;
        for (const auto& f : facets) {
            std::vector<std::string> l;
            for (Vertex v : f) l.push_back("v" + std::to_string(v));
            labelled.push_back(std::move(l));
        }
        return SimplicialComplex::from_labelled(labelled);
    }
};

Builder starting_simplex(int dim) {
    Builder b;
    std::vector<Vertex> vs;
    for (int i = 0; i <= dim; ++i) vs.push_back(b.next++);
    b.facets.emplace_back(std::move(vs));
    return b;
}

// Adds ridge ∪ {w} when its intersection with the complex is generated by
// some (not all, unless `allow_closed`) of its ridges. With `boundary_only`
// each such ridge must lie in exactly one facet.
bool shelling_step(Builder& b, Rng& rng, bool boundary_only, bool allow_closed) {
    const auto counts = b.ridge_counts();
    std::vector<Face> candidates;
    for (const auto& [ridge, count] : counts) {
        if (!boundary_only || count == 1) candidates.push_back(ridge);
    }
    if (candidates.empty()) return false;
    const Face ridge = candidates[rng.below(candidates.size())];
    Vertex w = 0;
    if (rng.chance(50)) {
        w = b.next++;
        b.facets.push_back(ridge.with(w));
        return true;
    }
    std::vector<Vertex> others;
    for (Vertex v = 0; v < b.next; ++v)
        if (!ridge.contains(v)) others.push_back(v);
    if (others.empty()) return false;
    w = others[rng.below(others.size())];
    const Face facet = ridge.with(w);
    const FaceSet present = b.faces();
    if (present.contains(facet)) return false;
    std::vector<Face> shared;
    for (Vertex v : facet) {
        const Face r = facet.without(v);
        auto it = counts.find(r);
        if (it == counts.end()) continue;
        if (boundary_only && it->second != 1) return false;
        shared.push_back(r);
    }
    if (!allow_closed && shared.size() == facet.size()) return false;
    for (const auto& g : all_subfaces(facet)) {
        if (!present.contains(g)) continue;
        if (std::none_of(shared.begin(), shared.end(), [&](const Face& r) { return g.is_subset_of(r); }))
            return false;
    }
    b.facets.push_back(facet);
    return true;
}

void random_stellar(Builder& b, Rng& rng, bool facets_only) {
    const Face& host = b.facets[rng.below(b.facets.size())];
    if (facets_only) {
        b.stellar(host);
        return;
    }
    std::vector<Face> subs;
    for (const auto& g : all_subfaces(host))
        if (!g.empty()) subs.push_back(g);
    b.stellar(subs[rng.below(subs.size())]);
}

Builder grow(Rng& rng, int dim, int budget, bool cm) {
    Builder b = starting_simplex(dim);
    const std::size_t steps = 1 + rng.below(static_cast<std::size_t>(2 * budget));
    for (std::size_t i = 0; i < steps && static_cast<int>(b.next) < budget; ++i) {
        if (rng.chance(25)) {
            random_stellar(b, rng, false);
        } else {
            shelling_step(b, rng, !cm, cm);
        }
    }
    return b;
}

Builder flag_sphere_builder(Rng& rng, int dim, int budget) {
    Builder b;
    const auto start = cross_polytope_boundary(dim + 1);
    b.facets = start.facets();
    b.next = static_cast<Vertex>(start.num_vertices());
    const std::size_t moves = rng.below(static_cast<std::size_t>(budget) - b.next + 1);
    for (std::size_t i = 0; i < moves; ++i) {
        const Face& host = b.facets[rng.below(b.facets.size())];
        const Vertex u = host[rng.below(host.size())];
        Vertex v = u;
        while (v == u) v = host[rng.below(host.size())];
        b.stellar(Face{u, v});
    }
    return b;
}

int minimum_vertices(InstanceClass cls, int dim) {
    switch (cls) {
        case InstanceClass::flag_sphere:
        case InstanceClass::flag_ball: return 2 * (dim + 1);
        case InstanceClass::sphere: return dim + 2;
        default: return dim + 1;
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    state ^= stream * 0x632be59bd9b4e019ULL;
    out ^= splitmix64(state);
    state ^= index * 0x8cb92ba72f3d8dd7ULL;
    return out ^ splitmix64(state);
}

std::string to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::sphere: return "sphere";
        case InstanceClass::ball: return "ball";
        case InstanceClass::cohen_macaulay: return "cm";
        case InstanceClass::flag_sphere: return "flag-sphere";
        case InstanceClass::flag_ball: return "flag-ball";
    }
    return "?";
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, InstanceClass cls, int dim, int vertex_budget)
    : seed_(seed), cls_(cls), dim_(dim), budget_(vertex_budget) {
    if (dim < 1 || dim > 3) throw PreconditionError("generator dimension must be 1, 2 or 3");
    if (vertex_budget > 12 || vertex_budget < minimum_vertices(cls, dim) + (cls == InstanceClass::flag_ball ? 1 : 0))
        throw PreconditionError("vertex budget out of range");
}

NamedComplex InstanceGenerator::generate(std::uint64_t index) const {
    const auto stream = static_cast<std::uint64_t>(cls_) * 8 + static_cast<std::uint64_t>(dim_);
    const std::string name = to_string(cls_) + "/d" + std::to_string(dim_) + "/" + std::to_string(seed_) + "/" +
                             std::to_string(index);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed_, stream, index * kMaxAttempts + static_cast<std::uint64_t>(attempt)));
        SimplicialComplex c;
        switch (cls_) {
            case InstanceClass::ball: {
                c = grow(rng, dim_, budget_, false).build();
                if (!is_homology_ball(c)) continue;
                break;
            }
            case InstanceClass::cohen_macaulay: {
                c = grow(rng, dim_, budget_, true).build();
                if (!is_cohen_macaulay(c)) continue;
                break;
            }
            case InstanceClass::sphere: {
                Builder b = starting_simplex(dim_ + 1);
                Builder s;
                for (Vertex v : b.facets.front()) s.facets.push_back(b.facets.front().without(v));
                s.next = b.next;
                const std::size_t moves = rng.below(static_cast<std::size_t>(budget_) - s.next + 1);
                for (std::size_t i = 0; i < moves; ++i) random_stellar(s, rng, false);
                c = s.build();
                if (!is_homology_sphere(c)) continue;
                break;
            }
            case InstanceClass::flag_sphere: {
                c = flag_sphere_builder(rng, dim_, budget_).build();
                if (!is_flag(c) || !is_homology_sphere(c)) continue;
                break;
            }
            case InstanceClass::flag_ball: {
                c = flag_sphere_builder(rng, dim_, budget_ - 1).build();
                const Vertex v = c.vertex_set()[rng.below(c.num_vertices())];
                c = delete_vertex(c, v);
                if (!is_flag(c) || !is_homology_ball(c)) continue;
                break;
            }
        }
        return {name, std::move(c)};
    }
    throw ConsistencyError("generator produced no valid instance for " + name);
}

std::pair<NamedComplex, NamedComplex> nested_balls(std::uint64_t seed, std::uint64_t index, int dim,
                                                   int vertex_budget) {
    const std::string name = "nested/d" + std::to_string(dim) + "/" + std::to_string(seed) + "/" +
                             std::to_string(index);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(dim),
                            index * kMaxAttempts + static_cast<std::uint64_t>(attempt)));
        Builder b = grow(rng, dim, vertex_budget / 2, false);
        // An interior vertex in every facet of the inner ball.
        const auto inner_facets = b.facets;
        for (const auto& f : inner_facets) b.stellar(f);
        const std::vector<Face> inner = b.facets;
        const std::size_t extra = 1 + rng.below(3);
        std::size_t added = 0;
        for (int tries = 0; added < extra && tries < 32; ++tries) added += shelling_step(b, rng, true, false) ? 1 : 0;
        if (added == 0) continue;
        std::vector<Face> fresh(b.facets.begin() + static_cast<std::ptrdiff_t>(inner.size()), b.facets.end());
        for (const auto& f : fresh)
            if (rng.chance(75)) b.stellar(f);
        const SimplicialComplex outer = b.build();
        std::vector<Face> translated;
        for (const auto& f : inner) {
            std::vector<std::string> l;
            for (Vertex v : f) l.push_back("v" + std::to_string(v));
            translated.push_back(outer.face_from_labels(l));
        }
        SimplicialComplex in = SimplicialComplex::from_facets(std::move(translated), outer.label_table());
        if (!is_homology_ball(outer) || !is_homology_ball(in)) continue;
        return {{name + "/outer", outer}, {name + "/inner", std::move(in)}};
    }
    throw ConsistencyError("no nested pair for " + name);
}

std::vector<NamedComplex> corpus_bases(int max_dim) {
    std::vector<NamedComplex> all;
    for (int d = 0; d <= 3; ++d) all.push_back({"simplex" + std::to_string(d), simplex(letters(d + 1))});
    for (int d = 1; d <= 3; ++d)
        all.push_back({"boundary_simplex" + std::to_string(d + 1), boundary_simplex(letters(d + 2))});
    all.push_back({"octahedron", cross_polytope_boundary(3)});
    for (int k = 1; k <= 3; ++k) all.push_back({"path" + std::to_string(k), path(k)});
    all.push_back({"cycle4", cycle(4)});
    all.push_back({"cycle5", cycle(5)});
    all.push_back({"cone_cycle4", cone(cycle(4), "apex")});
    all.push_back({"cone_octahedron", cone(cross_polytope_boundary(3), "apex")});
    all.push_back({"twin_stellar_ball", twin_stellar_ball()});
    all.push_back({"glued_octahedra_ball", glued_octahedra_ball()});
    std::vector<NamedComplex> out;
    for (auto& b : all)
        if (b.complex.dim() <= max_dim) out.push_back(std::move(b));
    return out;
}

std::vector<NamedTriangulation> corpus_triangulations(const NamedComplex& base) {
    const auto& c = base.complex;
    std::vector<NamedTriangulation> out;
    auto add = [&](const std::string& kind, Triangulation t, bool anti = false) {
        out.push_back({kind + "(" + base.name + ")", std::move(t), anti});
    };
    add("identity", identity_triangulation(c));
    const auto sd = barycentric(c);
    add("sd", sd);
    add("antiprism", antiprism(c), true);
    const auto st = stellar(c, c.facets().front(), "star");
    add("stellar", st);
    add("edgewise2", edgewise(c, 2));
    add("edgewise3", edgewise(c, 3));
    if (c.dim() <= 2) {
        add("antiprism_sd", compose(antiprism(sd.total()), sd));
    } else {
        add("sd_stellar", compose(barycentric(st.total()), st));
    }
    return out;
}

}  // namespace thetalab
