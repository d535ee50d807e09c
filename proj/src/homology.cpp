#include "thetalab/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "thetalab/errors.hpp"
#include "thetalab/poly.hpp"

namespace thetalab {
namespace {

// A boundary matrix as sparse columns of (row, ±1) entries.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> columns;
};

SparseMatrix boundary_matrix(const std::vector<Face>& faces, const std::vector<Face>& subfaces,
                             EliminationOrder order) {
    std::unordered_map<Face, std::uint32_t, FaceHash> index;
    index.reserve(subfaces.size());
    for (std::size_t i = 0; i < subfaces.size(); ++i) {
        const auto r = order == EliminationOrder::natural ? i : subfaces.size() - 1 - i;
        index.emplace(subfaces[i], static_cast<std::uint32_t>(r));
    }
    SparseMatrix m;
    m.rows = subfaces.size();
    m.columns.reserve(faces.size());
    for (const auto& f : faces) {
        std::vector<std::pair<std::uint32_t, int>> col;
        for (std::size_t i = 0; i < f.size(); ++i) {
            col.emplace_back(index.at(f.without(f[i])), i % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    if (order == EliminationOrder::reversed) std::reverse(m.columns.begin(), m.columns.end());
    return m;
}

// Column reduction keyed on the largest row index. Works for any
// coefficient arithmetic supplying `eliminate(target, pivot_col, row)`.
template <typename Coeff, typename Eliminate>
std::size_t reduce_rank(const SparseMatrix& m, Eliminate eliminate) {
    using Column = std::vector<std::pair<std::uint32_t, Coeff>>;
    std::vector<Column> reduced;
    std::vector<std::int64_t> owner(m.rows, -1);
    std::size_t rank = 0;
    for (const auto& raw : m.columns) {
        Column col;
        col.reserve(raw.size());
        for (const auto& [r, v] : raw) col.emplace_back(r, Coeff(v));
        while (!col.empty()) {
            const auto pivot = col.back().first;
            if (owner[pivot] < 0) break;
            col = eliminate(col, reduced[static_cast<std::size_t>(owner[pivot])]);
        }
        if (!col.empty()) {
            owner[col.back().first] = static_cast<std::int64_t>(reduced.size());
            ++rank;
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

// target := b*target - a*pivot where a, b are the entries at the pivot row,
// followed by removal of the common content. Fraction-free, so exact over Q.
template <typename Int>
std::vector<std::pair<std::uint32_t, Int>> integer_eliminate(
    const std::vector<std::pair<std::uint32_t, Int>>& target,
    const std::vector<std::pair<std::uint32_t, Int>>& pivot, bool& overflow) {
    const Int a = target.back().second;
    const Int b = pivot.back().second;
    std::vector<std::pair<std::uint32_t, Int>> out;
    out.reserve(target.size() + pivot.size());
    auto mul = [&](const Int& x, const Int& y) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
            std::int64_t r;
            if (__builtin_mul_overflow(x, y, &r)) overflow = true;
            return r;
        } else {
            return Int(x * y);
        }
    };
    auto sub = [&](const Int& x, const Int& y) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
            std::int64_t r;
            if (__builtin_sub_overflow(x, y, &r)) overflow = true;
            return r;
        } else {
            return Int(x - y);
        }
    };
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, mul(b, target[i].second));
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, sub(Int(0), mul(a, pivot[j].second)));
            ++j;
        } else {
            Int v = sub(mul(b, target[i].second), mul(a, pivot[j].second));
            if (v != 0) out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    Int g = 0;
    for (const auto& [r, v] : out) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
            g = std::gcd(g, v);
        } else {
            g = boost::multiprecision::gcd(g, v);
        }
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [r, v] : out) v /= g;
    return out;
}

struct Overflow {};

std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return reduce_rank<std::int64_t>(m, [](const auto& t, const auto& p) {
            bool overflow = false;
            auto out = integer_eliminate<std::int64_t>(t, p, overflow);
            if (overflow) throw Overflow{};
            return out;
        });
    } catch (const Overflow&) {
        return reduce_rank<Integer>(m, [](const auto& t, const auto& p) {
            bool overflow = false;
            return integer_eliminate<Integer>(t, p, overflow);
        });
    }
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
    using Column = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    return reduce_rank<std::uint64_t>(m, [p](const Column& t, const Column& piv) {
        // target -= (a / b) * pivot
        const std::uint64_t a = t.back().second % p;
        const std::uint64_t b = piv.back().second % p;
        const std::uint64_t factor = a * pow_mod(b, p - 2, p) % p;
        Column out;
        std::size_t i = 0, j = 0;
        while (i < t.size() || j < piv.size()) {
            if (j == piv.size() || (i < t.size() && t[i].first < piv[j].first)) {
                out.emplace_back(t[i].first, t[i].second % p);
                ++i;
            } else if (i == t.size() || piv[j].first < t[i].first) {
                out.emplace_back(piv[j].first, (p - factor * (piv[j].second % p) % p) % p);
                ++j;
            } else {
                const std::uint64_t v = (t[i].second % p + p - factor * (piv[j].second % p) % p) % p;
                if (v != 0) out.emplace_back(t[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    });
}

std::size_t rank(const SparseMatrix& m, FieldChoice field) {
    if (m.columns.empty() || m.rows == 0) return 0;
    if (field.is_rational()) return rank_rational(m);
    // entries ±1 are stored as residues
    SparseMatrix copy = m;
    const auto p = field.characteristic();
    for (auto& col : copy.columns)
        for (auto& [r, v] : col) v = v < 0 ? static_cast<int>(p) + v : v;
    return rank_mod_p(copy, p);
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// b_i of the link equals the sphere pattern: 1 in the top dimension, else 0.
bool link_is_sphere_like(const HomologyProfile& h, bool top_class_expected) {
    for (int i = -1; i <= h.top_dim; ++i) {
        const std::uint64_t expected = (top_class_expected && i == h.top_dim) ? 1 : 0;
        if (h(i) != expected) return false;
    }
    return true;
}

}  // namespace

FieldChoice FieldChoice::prime(std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError("field characteristic must be prime");
    return FieldChoice(p);
}

std::uint64_t HomologyProfile::operator()(int i) const {
    if (i < -1 || i > top_dim) return 0;
    return betti[static_cast<std::size_t>(i + 1)];
}

std::int64_t HomologyProfile::reduced_euler() const {
    std::int64_t chi = 0;
    for (int i = -1; i <= top_dim; ++i) {
        const auto b = static_cast<std::int64_t>((*this)(i));
        chi += (i % 2 == 0) ? b : -b;
    }
    return chi;
}

HomologyProfile betti(const SimplicialComplex& complex, FieldChoice field, EliminationOrder order) {
    if (complex.is_void()) throw PreconditionError("homology of the void complex");
    const int d = complex.dim();
    std::vector<std::vector<Face>> faces;
    for (int k = -1; k <= d; ++k) faces.push_back(complex.faces_of_dim(k));
    // ranks[k + 1] = rank of ∂_k : C_k -> C_{k-1}
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 3), 0);
    for (int k = 0; k <= d; ++k) {
        const auto& cols = faces[static_cast<std::size_t>(k + 1)];
        const auto& rows = faces[static_cast<std::size_t>(k)];
        ranks[static_cast<std::size_t>(k + 1)] = rank(boundary_matrix(cols, rows, order), field);
    }
    HomologyProfile h;
    h.top_dim = d;
    for (int k = -1; k <= d; ++k) {
        const auto idx = static_cast<std::size_t>(k + 1);
        h.betti.push_back(faces[idx].size() - ranks[idx] - ranks[idx + 1]);
    }
    return h;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
    std::int64_t chi = 0;
    const auto f = complex.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
    return chi;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, FieldChoice field) {
    if (complex.is_void()) throw PreconditionError("Cohen-Macaulay test on the void complex");
    for (const auto& f : complex.faces()) {
        const auto h = betti(link(complex, f), field);
        for (int i = -1; i < h.top_dim; ++i)
            if (h(i) != 0) return false;
    }
    return true;
}

bool is_cohen_macaulay_star(const SimplicialComplex& complex, FieldChoice field) {
    if (!is_cohen_macaulay(complex, field))
        throw PreconditionError("Cohen-Macaulay* is defined only for Cohen-Macaulay complexes");
    const int d = complex.dim();
    const auto& facets = complex.facets();
    for (std::size_t skip = 0; skip < facets.size(); ++skip) {
        std::vector<Face> rest;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (i != skip) rest.push_back(facets[i]);
        // Only the facet itself goes; its proper faces stay.
        for (Vertex v : facets[skip]) rest.push_back(facets[skip].without(v));
        auto removed = SimplicialComplex::from_facets(std::move(rest), complex.label_table());
        if (removed.is_void() || removed.dim() != d) return false;
        if (!is_cohen_macaulay(removed, field)) return false;
    }
    return true;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& complex) {
    if (complex.is_void() || complex.is_empty_complex())
        throw PreconditionError("boundary of a complex of dimension < 0");
    if (!is_pure(complex)) throw PreconditionError("boundary of a non-pure complex");
    std::unordered_map<Face, int, FaceHash> incidence;
    for (const auto& g : complex.facets())
        for (Vertex v : g) ++incidence[g.without(v)];
    std::vector<Face> ridges;
    for (const auto& [r, count] : incidence)
        if (count == 1) ridges.push_back(r);
    return generated_by(complex, std::move(ridges));
}

bool is_homology_sphere(const SimplicialComplex& complex, FieldChoice field) {
    if (complex.is_void()) return false;
    for (const auto& f : complex.faces())
        if (!link_is_sphere_like(betti(link(complex, f), field), true)) return false;
    return true;
}

std::optional<SimplicialComplex> is_homology_ball(const SimplicialComplex& complex, FieldChoice field) {
    if (complex.is_void()) return std::nullopt;
    if (complex.is_empty_complex()) return SimplicialComplex::void_complex(complex.label_table());
    if (!is_pure(complex)) return std::nullopt;
    auto boundary = boundary_subcomplex(complex);
    if (boundary.is_void() || boundary.dim() != complex.dim() - 1) return std::nullopt;
    if (!is_homology_sphere(boundary, field)) return std::nullopt;
    const auto on_boundary = face_set(boundary);
    for (const auto& f : complex.faces()) {
        const bool interior = !on_boundary.contains(f);
        if (!link_is_sphere_like(betti(link(complex, f), field), interior)) return std::nullopt;
    }
    return boundary;
}

std::optional<HomologyBall> HomologyBall::verify(SimplicialComplex complex, FieldChoice field) {
    auto boundary = is_homology_ball(complex, field);
    if (!boundary) return std::nullopt;
    return HomologyBall(std::move(complex), std::move(*boundary));
}

std::vector<Face> interior_faces(const SimplicialComplex& complex, const SimplicialComplex& boundary) {
    const auto on_boundary = face_set(translate(boundary, complex.label_table()));
    std::vector<Face> out;
    for (auto& f : complex.faces())
        if (!on_boundary.contains(f)) out.push_back(std::move(f));
    return out;
}

bool has_interior_vertex_property(const SimplicialComplex& complex, const SimplicialComplex& boundary) {
    const Face boundary_vertices = translate(boundary, complex.label_table()).vertex_set();
    return std::all_of(complex.facets().begin(), complex.facets().end(), [&](const Face& g) {
        return !g.is_subset_of(boundary_vertices);
    });
}

bool no_facet_on_union_boundaries(const HomologyBall& outer, const HomologyBall& inner) {
    const auto& big = outer.complex();
    if (!is_subcomplex(inner.complex(), big))
        throw PreconditionError("inner ball is not a subcomplex of the outer ball");
    if (inner.complex().dim() != big.dim()) throw PreconditionError("balls of different dimension");
    const Face on_boundaries = translate(inner.boundary(), big.label_table())
                                   .vertex_set()
                                   .unite(outer.boundary().vertex_set());
    return std::all_of(big.facets().begin(), big.facets().end(),
                       [&](const Face& g) { return !g.is_subset_of(on_boundaries); });
}

}  // namespace thetalab
