#include "thetalab/invariants.hpp"

#include <string>

#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"

namespace thetalab {

IntPoly h_from_f(const std::vector<std::int64_t>& f, std::size_t n) {
    IntPoly h;
    for (std::size_t i = 0; i <= n && i < f.size(); ++i) {
        if (f[i] == 0) continue;
        h += (IntPoly::one_minus_x_pow(n - i) * Integer(f[i])).shifted(i);
    }
    return h;
}

IntPoly h_poly(const SimplicialComplex& complex) {
    if (complex.is_void()) return {};
    const auto n = static_cast<std::size_t>(complex.dim() + 1);
    return h_from_f(complex.f_vector(), n);
}

IntPoly h_interior(const SimplicialComplex& complex, const SimplicialComplex& boundary) {
    if (complex.is_void()) throw PreconditionError("interior of the void complex");
    const auto n = static_cast<std::size_t>(complex.dim() + 1);
    std::vector<std::int64_t> f(n + 1, 0);
    for (const auto& face : interior_faces(complex, boundary)) ++f[face.size()];
    IntPoly direct = h_from_f(f, n);
    if (direct != reverse(h_poly(complex), n))
        throw ConsistencyError("interior h-polynomial disagrees with the reversed h-polynomial");
    return direct;
}

IntPoly theta_from_h(const IntPoly& h, std::size_t n) {
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        Integer top = 0, bottom = 0;
        for (std::size_t j = n - i; j <= n - 1; ++j) top += h.coeff(j);
        for (std::size_t j = 0; j < i; ++j) bottom += h.coeff(j);
        c[i] = top - bottom;
    }
    return IntPoly(std::move(c));
}

IntPoly theta(const SimplicialComplex& complex, const SimplicialComplex& boundary) {
    if (complex.is_void()) throw PreconditionError("theta of the void complex");
    if (complex.is_empty_complex()) {
        if (!boundary.is_void()) throw PreconditionError("the empty ball has a void boundary");
        return IntPoly{1};
    }
    const auto n = static_cast<std::size_t>(complex.dim() + 1);
    const IntPoly h = h_poly(complex);
    IntPoly difference = h - h_poly(boundary);
    if (difference != theta_from_h(h, n))
        throw ConsistencyError("theta disagrees with its partial-sum formula; boundary is suspect");
    return difference;
}

IntPoly theta(const HomologyBall& ball) { return theta(ball.complex(), ball.boundary()); }

IntPoly local_h(const Triangulation& t) {
    const auto& base = t.base();
    if (base.facets().size() != 1) throw PreconditionError("local h-polynomial needs a simplex as base");
    const Face& whole = base.facets().front();
    IntPoly out;
    for (const auto& f : all_subfaces(whole)) {
        IntPoly h = h_poly(restriction(t, f).total());
        if ((whole.size() - f.size()) % 2 == 1) h = -h;
        out += h;
    }
    return out;
}

GammaVector gamma_poly(const SimplicialComplex& sphere) {
    const auto n = static_cast<std::size_t>(sphere.dim() + 1);
    auto g = gamma_vector(h_poly(sphere), n);
    if (!g) throw ConsistencyError("h-polynomial of a claimed sphere is not symmetric");
    return *g;
}

IntPoly h_sd_via_pnk(const SimplicialComplex& complex) {
    if (complex.is_void()) throw PreconditionError("barycentric subdivision of the void complex");
    const auto n = static_cast<std::size_t>(complex.dim() + 1);
    const IntPoly h = h_poly(complex);
    IntPoly out;
    for (std::size_t k = 0; k <= n; ++k)
        if (h.coeff(k) != 0) out += pnk(n, k) * h.coeff(k);
    if (out != h_poly(barycentric(complex).total()))
        throw ConsistencyError("p_{n,k} expansion disagrees with the barycentric subdivision");
    return out;
}

IntPoly theta_sd_formula(const IntPoly& h, std::size_t n) {
    if (n == 0) throw PreconditionError("closed form needs a ball of dimension >= 0");
    IntPoly out;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
        Integer constant = 0, linear = 0;
        for (std::size_t j = n - i; j <= n; ++j) constant += h.coeff(j);
        for (std::size_t j = i + 1; j <= n; ++j) linear += h.coeff(j);
        IntPoly factor = IntPoly::constant(constant) + IntPoly::monomial(linear, 1);
        out += factor * pnk(n - 1, i);
    }
    return out;
}

IntPoly theta_sd_closed_form(const HomologyBall& ball) {
    const IntPoly formula = theta_sd_formula(h_poly(ball.complex()), ball.n());
    auto sd = HomologyBall::verify(barycentric(ball.complex()).total());
    if (!sd) throw ConsistencyError("barycentric subdivision of a ball failed ball verification");
    if (formula != theta(*sd))
        throw ConsistencyError("closed form for theta of the barycentric subdivision disagrees");
    return formula;
}

std::size_t interior_vertex_count(const SimplicialComplex& complex, const SimplicialComplex& boundary) {
    const Face on = translate(boundary, complex.label_table()).vertex_set();
    return complex.vertex_set().minus(on).size();
}

IntPoly derangement_poly(std::size_t n) {
    // surj[m][j]: ordered partitions of an m-set into j blocks
    std::vector<std::vector<Integer>> surj(n + 1, std::vector<Integer>(n + 1));
    surj[0][0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t j = 1; j <= m; ++j) surj[m][j] = Integer(j) * (surj[m - 1][j] + surj[m - 1][j - 1]);
    std::vector<std::vector<Integer>> binom(n + 1, std::vector<Integer>(n + 1));
    for (std::size_t a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : 0);
    }
    IntPoly out;
    for (std::size_t k = 0; k <= n; ++k) {
        // f-vector of sd(2^[k]): chains of j nonempty subsets
        std::vector<std::int64_t> f(k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            Integer chains = 0;
            for (std::size_t m = j; m <= k; ++m) chains += binom[k][m] * surj[m][j];
            f[j] = chains.convert_to<std::int64_t>();
        }
        IntPoly term = h_from_f(f, k) * binom[n][k];
        out += (n - k) % 2 == 1 ? -term : term;
    }
    return out;
}

IntPoly derangement_poly_direct(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return local_h(barycentric(simplex(labels)));
}

}  // namespace thetalab
