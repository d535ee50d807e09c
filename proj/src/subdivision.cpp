#include "thetalab/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "thetalab/errors.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/poly.hpp"

namespace thetalab {

Triangulation::Triangulation(SimplicialComplex base, SimplicialComplex total,
                             std::vector<std::pair<Face, Face>> table)
    : base_(std::move(base)), total_(std::move(total)), table_(std::move(table)) {
    std::sort(table_.begin(), table_.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    index_.reserve(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) index_.emplace(table_[i].first, i);
}

Triangulation Triangulation::from_rule(SimplicialComplex base, SimplicialComplex total,
                                       const CarrierRule& rule) {
    std::vector<std::pair<Face, Face>> table;
    for (auto& f : total.faces()) {
        Face c = rule(f);
        table.emplace_back(std::move(f), std::move(c));
    }
    return Triangulation(std::move(base), std::move(total), std::move(table));
}

Triangulation Triangulation::from_table(SimplicialComplex base, SimplicialComplex total,
                                        std::vector<std::pair<Face, Face>> carriers) {
    const auto faces = face_set(total);
    if (carriers.size() != faces.size())
        throw PreconditionError("carrier table does not cover the faces of the triangulation");
    for (const auto& [f, c] : carriers)
        if (!faces.contains(f)) throw NotAFace("carrier table entry is not a face");
    return Triangulation(std::move(base), std::move(total), std::move(carriers));
}

const Face& Triangulation::carrier(const Face& face) const {
    auto it = index_.find(face);
    if (it == index_.end()) throw NotAFace("carrier of a non-face " + total_.face_label(face));
    return table_[it->second].second;
}

std::vector<std::string> carrier_violations(const Triangulation& t) {
    std::vector<std::string> out;
    const auto& base = t.base();
    const auto& total = t.total();
    for (const auto& [f, c] : t.carriers()) {
        if (!base.contains(c)) out.push_back("carrier of " + total.face_label(f) + " is not a base face");
        if (f.empty() && !c.empty()) out.push_back("carrier of the empty face is nonempty");
        for (Vertex v : f) {
            const Face& sub = t.carrier(f.without(v));
            if (!sub.is_subset_of(c))
                out.push_back("carrier not monotone at " + total.face_label(f));
            if (!t.carrier(Face{v}).is_subset_of(c))
                out.push_back("carrier of " + total.face_label(f) + " misses a vertex carrier");
        }
    }
    // Restrictions are only subcomplexes when the carriers are monotone.
    if (out.empty() && !base.is_void()) {
        for (const auto& g : base.faces()) {
            const auto r = restriction(t, g).total();
            if (!is_pure(r) || r.dim() != g.dim()) {
                out.push_back("restriction to " + base.face_label(g) + " is not pure of full dimension");
                continue;
            }
            if (g.size() == 1 && r.num_vertices() != 1)
                out.push_back("restriction to vertex " + base.face_label(g) + " is not a point");
            if (!g.empty() && reduced_euler_characteristic(r) != 0)
                out.push_back("restriction to " + base.face_label(g) + " has nonzero Euler characteristic");
        }
    }
    return out;
}

Triangulation identity_triangulation(const SimplicialComplex& complex) {
    return Triangulation::from_rule(complex, complex, [](const Face& f) { return f; });
}

namespace {

// Carrier rule for constructions whose carriers are unions of vertex carriers.
Triangulation::CarrierRule union_of(std::vector<Face> vertex_carriers) {
    return [vc = std::move(vertex_carriers)](const Face& f) {
        Face c;
        for (Vertex v : f) c = c.unite(vc[v]);
        return c;
    };
}

void require_nonvoid(const SimplicialComplex& c, const char* what) {
    if (c.is_void()) throw PreconditionError(std::string(what) + " of the void complex");
}

}  // namespace

Triangulation barycentric(const SimplicialComplex& complex) {
    require_nonvoid(complex, "barycentric subdivision");
    auto table = std::make_shared<LabelTable>();
    std::vector<Face> vertex_carriers;
    std::map<Face, Vertex> vertex_of;
    for (const auto& f : complex.faces()) {
        if (f.empty()) continue;
        vertex_of.emplace(f, table->intern(complex.face_label(f)));
        vertex_carriers.push_back(f);
    }
    std::vector<Face> facets;
    for (const auto& g : complex.facets()) {
        if (g.empty()) {
            facets.emplace_back();
            continue;
        }
        std::vector<Vertex> order(g.begin(), g.end());
        do {
            std::vector<Vertex> chain;
            Face prefix;
            for (Vertex v : order) {
                prefix = prefix.with(v);
                chain.push_back(vertex_of.at(prefix));
            }
            facets.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    auto total = SimplicialComplex::from_facets(std::move(facets), std::move(table));
    return Triangulation::from_rule(complex, std::move(total), union_of(std::move(vertex_carriers)));
}

namespace {

// Ordered set partitions of `rest`, each as a list of blocks.
void ordered_partitions(const Face& rest, std::vector<Face>& prefix, std::vector<std::vector<Face>>& out) {
    if (rest.empty()) {
        out.push_back(prefix);
        return;
    }
    for (auto& block : all_subfaces(rest)) {
        if (block.empty()) continue;
        prefix.push_back(block);
        ordered_partitions(rest.minus(block), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Triangulation antiprism(const SimplicialComplex& complex) {
    require_nonvoid(complex, "antiprism triangulation");
    auto table = std::make_shared<LabelTable>();
    std::vector<Face> vertex_carriers;
    std::map<std::pair<Face, Vertex>, Vertex> vertex_of;
    for (const auto& f : complex.faces()) {
        for (Vertex v : f) {
            const auto label = "(" + complex.face_label(f) + "," + complex.labels().label(v) + ")";
            vertex_of.emplace(std::make_pair(f, v), table->intern(label));
            vertex_carriers.push_back(f);
        }
    }
    std::vector<Face> facets;
    for (const auto& g : complex.facets()) {
        if (g.empty()) {
            facets.emplace_back();
            continue;
        }
        std::vector<std::vector<Face>> partitions;
        std::vector<Face> prefix;
        ordered_partitions(g, prefix, partitions);
        for (const auto& blocks : partitions) {
            std::vector<Vertex> facet;
            Face running;
            for (const auto& block : blocks) {
                running = running.unite(block);
                for (Vertex v : block) facet.push_back(vertex_of.at({running, v}));
            }
            facets.emplace_back(std::move(facet));
        }
    }
    auto total = SimplicialComplex::from_facets(std::move(facets), std::move(table));
    return Triangulation::from_rule(complex, std::move(total), union_of(std::move(vertex_carriers)));
}

Triangulation stellar(const SimplicialComplex& complex, const Face& face, std::string_view apex) {
    if (face.empty()) throw PreconditionError("stellar subdivision on the empty face");
    if (!complex.contains(face)) throw NotAFace("stellar subdivision on a non-face " + complex.face_label(face));
    auto table = std::make_shared<LabelTable>(complex.labels());
    const Vertex v = table->intern(apex);
    if (complex.vertex_set().contains(v))
        throw PreconditionError("stellar apex '" + std::string(apex) + "' is already a vertex");
    std::vector<Face> facets;
    for (const auto& g : complex.facets()) {
        if (!face.is_subset_of(g)) {
            facets.push_back(g);
            continue;
        }
        const Face outside = g.minus(face);
        for (Vertex w : face) facets.push_back(face.without(w).unite(outside).with(v));
    }
    auto total = SimplicialComplex::from_facets(std::move(facets), std::move(table));
    return Triangulation::from_rule(complex, std::move(total), [face, v](const Face& f) {
        if (!f.contains(v)) return f;
        return f.without(v).unite(face);
    });
}

namespace {

// Lattice points of weight r on the vertices of `g`, as coefficient vectors.
void compositions(std::size_t parts, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(r);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= r; ++a) {
        cur.push_back(a);
        compositions(parts, r - a, cur, out);
        cur.pop_back();
    }
}

// Bron-Kerbosch without pivoting; graphs here have at most a few dozen nodes.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& r,
                     std::vector<std::size_t> p, std::vector<std::size_t> x,
                     std::vector<std::vector<std::size_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    while (!p.empty()) {
        const std::size_t u = p.back();
        std::vector<std::size_t> np, nx;
        for (auto w : p)
            if (adj[u][w]) np.push_back(w);
        for (auto w : x)
            if (adj[u][w]) nx.push_back(w);
        r.push_back(u);
        maximal_cliques(adj, r, np, nx, out);
        r.pop_back();
        p.pop_back();
        x.push_back(u);
    }
}

}  // namespace

Triangulation edgewise(const SimplicialComplex& complex, int r) {
    if (r < 1) throw PreconditionError("edgewise subdivision needs r >= 1");
    require_nonvoid(complex, "edgewise subdivision");
    auto table = std::make_shared<LabelTable>();
    std::vector<Face> vertex_carriers;
    std::vector<Face> facets;
    for (const auto& g : complex.facets()) {
        if (g.empty()) {
            facets.emplace_back();
            continue;
        }
        std::vector<std::vector<int>> points;
        std::vector<int> cur;
        compositions(g.size(), r, cur, points);
        std::vector<Vertex> ids;
        std::vector<std::vector<int>> partial;  // prefix sums along the vertex order
        for (const auto& x : points) {
            std::string label;
            std::vector<Vertex> support;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0) continue;
                if (!label.empty()) label += "+";
                label += complex.labels().label(g[i]) + ":" + std::to_string(x[i]);
                support.push_back(g[i]);
            }
            const Vertex id = table->intern(label);
            if (id == vertex_carriers.size()) vertex_carriers.push_back(Face::from_sorted(support));
            ids.push_back(id);
            std::vector<int> y(x.size());
            std::partial_sum(x.begin(), x.end(), y.begin());
            partial.push_back(std::move(y));
        }
        const std::size_t m = points.size();
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                bool up = true, down = true;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const int d = partial[a][i] - partial[b][i];
                    up = up && (d == 0 || d == 1);
                    down = down && (d == 0 || d == -1);
                }
                adj[a][b] = adj[b][a] = up || down;
            }
        }
        std::vector<std::vector<std::size_t>> cliques;
        std::vector<std::size_t> rr, p(m);
        std::iota(p.begin(), p.end(), 0);
        maximal_cliques(adj, rr, p, {}, cliques);
        for (const auto& c : cliques) {
            std::vector<Vertex> facet;
            for (auto i : c) facet.push_back(ids[i]);
            facets.emplace_back(std::move(facet));
        }
    }
    auto total = SimplicialComplex::from_facets(std::move(facets), std::move(table));
    return Triangulation::from_rule(complex, std::move(total), union_of(std::move(vertex_carriers)));
}

Triangulation restriction(const Triangulation& t, const Face& face) {
    if (!t.base().contains(face)) throw NotAFace("restriction to a non-face " + t.base().face_label(face));
    std::vector<std::pair<Face, Face>> kept;
    std::vector<Face> faces;
    for (const auto& [f, c] : t.carriers()) {
        if (!c.is_subset_of(face)) continue;
        kept.emplace_back(f, c);
        faces.push_back(f);
    }
    auto total = SimplicialComplex::from_facets(std::move(faces), t.total().label_table());
    return Triangulation::from_table(simplex_on(t.base(), face), std::move(total), std::move(kept));
}

Triangulation compose(const Triangulation& outer, const Triangulation& inner) {
    if (!(outer.base() == inner.total()))
        throw PreconditionError("compose: outer triangulation is not over the inner total complex");
    const bool same = outer.base().label_table() == inner.total().label_table();
    std::vector<std::pair<Face, Face>> table;
    for (const auto& [f, c] : outer.carriers()) {
        const Face mid = same ? c : translate_face(c, outer.base().labels(), inner.total().labels());
        table.emplace_back(f, inner.carrier(mid));
    }
    return Triangulation::from_table(inner.base(), outer.total(), std::move(table));
}

ThetaClass theta_class(const Triangulation& t) {
    ThetaClass out;
    for (const auto& g : t.base().faces()) {
        if (g.empty()) continue;
        auto ball = HomologyBall::verify(restriction(t, g).total());
        if (!ball)
            throw PreconditionError("restriction to " + t.base().face_label(g) + " is not a homology ball");
        const IntPoly th = theta(*ball);
        const bool nonneg = is_nonnegative(th);
        out.positive = out.positive && nonneg;
        out.unimodal = out.unimodal && nonneg && is_unimodal(th);
        out.gamma_positive = out.gamma_positive && is_gamma_positive(th, g.size());
    }
    return out;
}

}  // namespace thetalab
