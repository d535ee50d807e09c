#include "doctest.h"
#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/instances.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/subdivision.hpp"

using namespace thetalab;

namespace {

using F = std::vector<std::int64_t>;

bool has_label(const SimplicialComplex& c, const std::string& label) {
    for (Vertex v : c.vertex_set())
        if (c.labels().label(v) == label) return true;
    return false;
}

}  // namespace

TEST_CASE("barycentric subdivision") {
    auto edge = simplex({"a", "b"});
    auto sde = barycentric(edge);
    CHECK(sde.total().f_vector() == F{1, 3, 2});
    CHECK(h_poly(sde.total()) == IntPoly{1, 1});
    CHECK(has_label(sde.total(), "{a,b}"));
    CHECK(sde.carrier(sde.total().face_from_labels({"{a,b}"})) == edge.facets()[0]);
    CHECK(sde.carrier(sde.total().face_from_labels({"{a}"})) == edge.face_from_labels({"a"}));

    CHECK(barycentric(simplex(letters(3))).total().f_vector() == F{1, 7, 12, 6});
    CHECK(barycentric(simplex({})).total().is_empty_complex());
}

TEST_CASE("antiprism triangulation") {
    auto edge = simplex({"a", "b"});
    auto t = antiprism(edge);
    const auto& c = t.total();
    CHECK(c.num_vertices() == 4);
    CHECK(c.facets().size() == 3);
    auto fl = [&](std::vector<std::string> l) { return c.face_from_labels(l); };
    CHECK(c.contains(fl({"({a},a)", "({a,b},b)"})));
    CHECK(c.contains(fl({"({a,b},b)", "({a,b},a)"})));
    CHECK(c.contains(fl({"({a,b},a)", "({b},b)"})));
    CHECK(t.carrier(fl({"({a,b},a)"})) == edge.facets()[0]);

    auto tri = antiprism(simplex(letters(3)));
    CHECK(tri.total().num_vertices() == 12);
    CHECK(carrier_violations(tri).empty());

    auto pt = antiprism(simplex({"a"}));
    CHECK(pt.total().f_vector() == F{1, 1});
}

TEST_CASE("stellar subdivision") {
    auto tri = simplex(letters(3));
    auto st = stellar(tri, tri.facets()[0], "o");
    CHECK(st.total() == cone(boundary_simplex(letters(3)), "o"));
    CHECK(st.carrier(st.total().face_from_labels({"o"})) == tri.facets()[0]);
    CHECK(st.carrier(st.total().face_from_labels({"o", "a"})) == tri.facets()[0]);

    auto edge = simplex({"a", "b"});
    auto se = stellar(edge, edge.facets()[0], "m");
    CHECK(se.total().facets().size() == 2);
    CHECK(se.total().f_vector() == F{1, 3, 2});

    CHECK_THROWS_AS(stellar(tri, Face{}, "o"), PreconditionError);
    CHECK_THROWS_AS(stellar(path(2), path(2).face_from_labels({"0", "2"}), "o"), NotAFace);
    CHECK_THROWS_AS(stellar(tri, tri.facets()[0], "a"), PreconditionError);

    // Stellar moves on an interior edge of a 2-ball.
    auto sq = simplex(letters(4));
    auto onedge = stellar(sq, sq.face_from_labels({"a", "b"}), "m");
    CHECK(onedge.total().facets().size() == 2);
    CHECK(carrier_violations(onedge).empty());
}

TEST_CASE("edgewise subdivision") {
    auto edge = simplex({"a", "b"});
    auto e2 = edgewise(edge, 2);
    CHECK(e2.total().f_vector() == F{1, 3, 2});
    CHECK(has_label(e2.total(), "a:1+b:1"));

    for (const auto& base : {simplex(letters(3)), cross_polytope_boundary(3), path(3)}) {
        auto one = edgewise(base, 1);
        CHECK(one.total().f_vector() == base.f_vector());
        for (const auto& [f, c] : one.carriers()) CHECK(f.size() == c.size());
    }

    auto tri = edgewise(simplex(letters(3)), 3);
    CHECK(tri.total().f_vector() == F{1, 10, 18, 9});
    CHECK(carrier_violations(tri).empty());
    CHECK_THROWS_AS(edgewise(edge, 0), PreconditionError);
}

TEST_CASE("restriction") {
    auto tri = simplex(letters(3));
    auto ab = tri.face_from_labels({"a", "b"});

    auto r = restriction(barycentric(tri), ab);
    CHECK(r.total() == barycentric(simplex({"a", "b"})).total());
    CHECK(restriction(barycentric(tri), Face{}).total().is_empty_complex());

    auto ra = restriction(antiprism(tri), ab);
    CHECK(ra.total() == antiprism(simplex({"a", "b"})).total());

    auto re = restriction(edgewise(tri, 3), ab);
    CHECK(re.total() == edgewise(simplex({"a", "b"}), 3).total());

    CHECK_THROWS_AS(restriction(barycentric(path(2)), path(2).face_from_labels({"0", "2"})), NotAFace);
}

TEST_CASE("restrictions of sd are sd of the face, for every corpus face") {
    for (const auto& base : corpus_bases(3)) {
        auto sd = barycentric(base.complex);
        for (const auto& g : base.complex.faces()) {
            CHECK(restriction(sd, g).total() == barycentric(simplex_on(base.complex, g)).total());
        }
    }
}

TEST_CASE("composition") {
    auto edge = simplex({"a", "b"});
    auto inner = barycentric(edge);
    auto outer = barycentric(inner.total());
    auto comp = compose(outer, inner);
    CHECK(comp.total().num_vertices() == 5);
    CHECK(comp.base() == edge);
    CHECK(carrier_violations(comp).empty());

    auto tri = simplex(letters(3));
    auto st = stellar(tri, tri.facets()[0], "o");
    auto id = compose(identity_triangulation(st.total()), st);
    CHECK(id.total() == st.total());
    CHECK(id.carriers() == st.carriers());

    auto sds = compose(barycentric(st.total()), st);
    CHECK(carrier_violations(sds).empty());
    CHECK(sds.base() == tri);

    CHECK_THROWS_AS(compose(barycentric(tri), st), PreconditionError);
}

TEST_CASE("carrier axioms hold for every corpus triangulation") {
    for (const auto& base : corpus_bases(3)) {
        for (const auto& t : corpus_triangulations(base)) {
            INFO(t.name);
            CHECK(carrier_violations(t.triangulation).empty());
        }
    }
}

TEST_CASE("faces of the total complex are partitioned by carrier") {
    for (const auto& base : corpus_bases(2)) {
        for (const auto& t : corpus_triangulations(base)) {
            INFO(t.name);
            const auto& tri = t.triangulation;
            std::vector<std::int64_t> counts(tri.total().f_vector().size(), 0);
            for (const auto& g : tri.base().faces()) {
                auto r = restriction(tri, g).total();
                auto b = g.empty() ? SimplicialComplex::void_complex(r.label_table()) : boundary_subcomplex(r);
                for (const auto& f : interior_faces(r, b)) ++counts[f.size()];
            }
            CHECK(counts == tri.total().f_vector());
        }
    }
}

TEST_CASE("boundary commutes with barycentric subdivision") {
    for (const auto& base : corpus_bases(3)) {
        auto ball = HomologyBall::verify(base.complex);
        if (!ball || ball->boundary().is_void() || base.complex.is_empty_complex()) continue;
        INFO(base.name);
        auto lhs = boundary_subcomplex(barycentric(base.complex).total());
        auto rhs = barycentric(ball->boundary()).total();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("theta classes") {
    for (const auto& base : corpus_bases(3)) {
        INFO(base.name);
        auto sd = theta_class(barycentric(base.complex));
        CHECK(sd.positive);
        CHECK(sd.unimodal);
        CHECK(sd.gamma_positive);
        auto ap = theta_class(antiprism(base.complex));
        CHECK(ap.positive);
        CHECK(ap.unimodal);
        CHECK(ap.gamma_positive);
    }
    auto id = theta_class(identity_triangulation(simplex(letters(3))));
    CHECK_FALSE(id.positive);
    auto edge_id = theta_class(identity_triangulation(simplex({"a", "b"})));
    CHECK_FALSE(edge_id.positive);
    auto pt = theta_class(identity_triangulation(simplex({"a"})));
    CHECK(pt.positive);
}
