#include "doctest.h"
#include "oracles.hpp"
#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/instances.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/subdivision.hpp"

using namespace thetalab;

namespace {

HomologyBall ball_of(const SimplicialComplex& c) {
    auto b = HomologyBall::verify(c);
    REQUIRE(b);
    return *b;
}

IntPoly minus_run(std::size_t n) {
    std::vector<Integer> c(n, Integer(-1));
    c[0] = 0;
    return IntPoly(c);
}

std::vector<HomologyBall> random_balls(int dim, std::uint64_t seed, int count) {
    std::vector<HomologyBall> out;
    InstanceGenerator gen(seed, InstanceClass::ball, dim);
    for (int i = 0; i < count; ++i) out.push_back(ball_of(gen.next().complex));
    return out;
}

}  // namespace

TEST_CASE("h-polynomials") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Integer> ones(static_cast<std::size_t>(n), Integer(1));
        CHECK(h_poly(boundary_simplex(letters(n))) == IntPoly(ones));
    }
    CHECK(h_poly(glued_octahedra_ball()) == IntPoly{1, 7, 6, 2});
    CHECK(h_poly(twin_stellar_ball()) == IntPoly{1, 3, 2, 2});
    CHECK(h_poly(barycentric(simplex(letters(3))).total()) == IntPoly{1, 4, 1});
    CHECK(h_poly(SimplicialComplex::from_labelled({})).is_zero());
    CHECK(h_poly(simplex({})) == IntPoly{1});
    CHECK(h_from_f({1, 7, 12, 6}, 3) == IntPoly{1, 4, 1});
}

TEST_CASE("h-vector sums to the facet count and cones keep h") {
    for (const auto& base : corpus_bases(3)) {
        if (!is_pure(base.complex)) continue;
        const IntPoly h = h_poly(base.complex);
        Integer sum = 0;
        for (const auto& c : h.coefficients()) sum += c;
        CHECK(sum == Integer(base.complex.facets().size()));
        CHECK(h_poly(cone(base.complex, "fresh")) == h);
        CHECK(h == oracle::h_from_f(base.complex.f_vector()));
    }
}

TEST_CASE("interior h-polynomial") {
    auto tri = ball_of(simplex(letters(3)));
    CHECK(h_interior(tri.complex(), tri.boundary()) == IntPoly{0, 0, 0, 1});
    auto twin = ball_of(twin_stellar_ball());
    CHECK(h_interior(twin.complex(), twin.boundary()) == IntPoly{0, 2, 2, 3, 1});
    auto c = ball_of(cone(cross_polytope_boundary(3), "apex"));
    CHECK(h_interior(c.complex(), c.boundary()) == reverse(IntPoly{1, 3, 3, 1}, 4));
}

TEST_CASE("theta of simplices and small balls") {
    for (std::size_t n = 2; n <= 6; ++n) CHECK(theta(ball_of(simplex(letters(static_cast<int>(n))))) == minus_run(n));
    CHECK(theta(ball_of(simplex({"a"}))).is_zero());
    CHECK(theta(ball_of(simplex({}))) == IntPoly{1});

    CHECK(theta(ball_of(twin_stellar_ball())) == IntPoly{0, 1, 0, 1});
    CHECK(theta(ball_of(glued_octahedra_ball())) == IntPoly{0, 1, 0, 1});

    auto tri = simplex(letters(3));
    CHECK(theta(ball_of(stellar(tri, tri.facets()[0], "o").total())).is_zero());
    CHECK(theta(ball_of(antiprism(tri).total())) == IntPoly{0, 2, 2});
    CHECK(theta(ball_of(edgewise(simplex(letters(4)), 4).total())).is_zero());
    CHECK(theta(ball_of(cone(cross_polytope_boundary(3), "apex"))).is_zero());
}

TEST_CASE("theta refuses an inconsistent boundary") {
    auto tri = simplex(letters(3));
    CHECK_THROWS_AS(theta(tri, simplex({})), ConsistencyError);
}

TEST_CASE("theta from the h-vector agrees with the definition") {
    for (int dim = 1; dim <= 3; ++dim) {
        for (const auto& b : random_balls(dim, 31, 5)) {
            CHECK(theta_from_h(h_poly(b.complex()), b.n()) == theta(b));
        }
    }
}

TEST_CASE("theta is symmetric with zero constant term and linear term r - 1") {
    for (int dim = 1; dim <= 3; ++dim) {
        for (const auto& b : random_balls(dim, 32, 5)) {
            auto t = theta(b);
            CHECK(is_symmetric(t, b.n()));
            CHECK(t.coeff(0) == 0);
            const auto r = static_cast<long long>(interior_vertex_count(b.complex(), b.boundary()));
            CHECK(t.coeff(1) == r - 1);
            if (dim == 1) CHECK(t == IntPoly{0, r - 1});
            if (dim == 2) CHECK(t == IntPoly{0, r - 1, r - 1});
        }
    }
}

TEST_CASE("quadratic theta coefficient in dimension three") {
    for (const auto& b : random_balls(3, 33, 6)) {
        std::int64_t interior_edges = 0;
        std::int64_t interior_vertices = 0;
        for (const auto& f : interior_faces(b.complex(), b.boundary())) {
            if (f.size() == 1) ++interior_vertices;
            if (f.size() == 2) ++interior_edges;
        }
        const std::int64_t n = 4;
        const std::int64_t f0 = static_cast<std::int64_t>(b.complex().num_vertices());
        CHECK(theta(b).coeff(2) == interior_edges - f0 - (n - 2) * interior_vertices + n - 1);
    }
}

TEST_CASE("h of a ball splits into the boundary and theta") {
    for (int dim = 1; dim <= 3; ++dim) {
        for (const auto& b : random_balls(dim, 34, 5)) {
            auto h = h_poly(b.complex());
            CHECK(h.coeff(b.n()) == 0);
            auto d = symmetric_decomposition(h, b.n() - 1);
            CHECK(d.a == h_poly(b.boundary()));
            CHECK(d.b.shifted(1) == theta(b));
        }
    }
}

TEST_CASE("local h-polynomials") {
    for (int n = 1; n <= 4; ++n) CHECK(local_h(identity_triangulation(simplex(letters(n)))).is_zero());
    CHECK(local_h(barycentric(simplex({"a", "b"}))) == IntPoly{0, 1});
    auto tri = simplex(letters(3));
    CHECK(local_h(stellar(tri, tri.facets()[0], "o")) == IntPoly{0, 1, 1});
    CHECK(local_h(barycentric(tri)) == derangement_poly(3));
    CHECK(local_h(identity_triangulation(simplex({}))) == IntPoly{1});
    CHECK_THROWS_AS(local_h(barycentric(path(2))), PreconditionError);
}

TEST_CASE("gamma vectors of spheres") {
    auto g = gamma_poly(cross_polytope_boundary(3));
    CHECK(g.gamma == std::vector<Integer>{1, 0});
    CHECK(gamma_poly(boundary_simplex(letters(4))).gamma == std::vector<Integer>{1, -2});
    CHECK(gamma_poly(boundary_simplex(letters(5))).gamma == std::vector<Integer>{1, -3, 1});
    CHECK(gamma_poly(cycle(4)).gamma == std::vector<Integer>{1, 0});
    CHECK(gamma_poly(cycle(6)).gamma == std::vector<Integer>{1, 2});
}

TEST_CASE("h of the barycentric subdivision through p_{n,k}") {
    CHECK(h_sd_via_pnk(simplex({"a", "b"})) == IntPoly{1, 1});
    CHECK(h_sd_via_pnk(simplex(letters(3))) == IntPoly{1, 4, 1});
    for (const auto& base : corpus_bases(3)) {
        if (!is_pure(base.complex) || base.complex.is_empty_complex()) continue;
        CHECK(h_sd_via_pnk(base.complex) == h_poly(barycentric(base.complex).total()));
    }
}

TEST_CASE("closed form for theta of the barycentric subdivision") {
    CHECK(theta_sd_formula(IntPoly{1}, 2).is_zero());
    CHECK(theta_sd_formula(IntPoly{1, 1}, 2) == IntPoly{0, 2});
    CHECK(theta_sd_closed_form(ball_of(path(2))) == IntPoly{0, 2});
    CHECK(theta_sd_closed_form(ball_of(simplex(letters(3)))).is_zero());
    for (int dim = 1; dim <= 3; ++dim) {
        for (const auto& b : random_balls(dim, 35, 3)) {
            CHECK(theta_sd_closed_form(b) == theta(ball_of(barycentric(b.complex()).total())));
        }
    }
}

TEST_CASE("interior vertex counts") {
    auto twin = ball_of(twin_stellar_ball());
    CHECK(interior_vertex_count(twin.complex(), twin.boundary()) == 2);
    auto tri = ball_of(simplex(letters(3)));
    CHECK(interior_vertex_count(tri.complex(), tri.boundary()) == 0);
    auto sd = ball_of(barycentric(simplex(letters(3))).total());
    CHECK(interior_vertex_count(sd.complex(), sd.boundary()) == 1);
}
