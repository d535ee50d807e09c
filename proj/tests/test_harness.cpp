#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/harness.hpp"
#include "thetalab/instances.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/subdivision.hpp"
#include "thetalab/suites.hpp"

using namespace thetalab;

namespace {

HomologyBall ball_of(const SimplicialComplex& c) {
    auto b = HomologyBall::verify(c);
    REQUIRE(b);
    return *b;
}

void check_equal_pass(const VerificationReport& r, const IntPoly& both) {
    INFO(r.identity << " on " << r.instance << ": " << r.detail);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.lhs);
    REQUIRE(r.rhs);
    CHECK(*r.lhs == both);
    CHECK(*r.rhs == both);
}

SimplicialComplex tri() { return simplex(letters(3)); }

}  // namespace

TEST_CASE("locality") {
    check_equal_pass(verify_locality(TriangulationProfile(barycentric(simplex({"a", "b"}))), "sd(edge)"),
                     IntPoly{1, 1});
    check_equal_pass(verify_locality(TriangulationProfile(antiprism(tri())), "antiprism"), IntPoly{1, 9, 3});
    for (const auto& base : corpus_bases(2)) {
        check_equal_pass(verify_locality(TriangulationProfile(identity_triangulation(base.complex)), base.name),
                         h_poly(base.complex));
    }
}

TEST_CASE("theta formula") {
    check_equal_pass(verify_theta_formula(TriangulationProfile(barycentric(simplex({"a", "b"}))), "sd(edge)"),
                     IntPoly{1, 1});
    check_equal_pass(verify_theta_formula(TriangulationProfile(antiprism(tri())), "antiprism"), IntPoly{1, 9, 3});
    auto t = tri();
    TriangulationProfile st(stellar(t, t.facets()[0], "o"));
    check_equal_pass(verify_theta_formula(st, "stellar"), IntPoly{1, 1, 1});
    CHECK(st.restriction_theta(t.face_from_labels({"a", "b"})) == IntPoly{0, -1});
    CHECK(st.restriction_theta(t.facets()[0]).is_zero());
}

TEST_CASE("local h expansion in theta and derangement polynomials") {
    check_equal_pass(verify_local_h_expansion(TriangulationProfile(barycentric(simplex({"a", "b"}))), "sd(edge)"),
                     IntPoly{0, 1});
    auto t = tri();
    check_equal_pass(verify_local_h_expansion(TriangulationProfile(stellar(t, t.facets()[0], "o")), "stellar"),
                     IntPoly{0, 1, 1});
    for (int n = 1; n <= 4; ++n) {
        check_equal_pass(
            verify_local_h_expansion(TriangulationProfile(identity_triangulation(simplex(letters(n)))), "identity"),
            IntPoly{});
    }
    auto r = verify_local_h_expansion(TriangulationProfile(barycentric(path(2))), "sd(path2)");
    CHECK(r.verdict == Verdict::inapplicable);
}

TEST_CASE("profile local h matches the direct computation") {
    TriangulationProfile p(antiprism(tri()));
    CHECK(p.local_h(tri().facets()[0]) == local_h(antiprism(tri())));
    CHECK_THROWS_AS((void)TriangulationProfile(barycentric(cross_polytope_boundary(3))).restriction_h(Face{99}), NotAFace);
}

TEST_CASE("monotonicity under triangulations of balls with interior vertices") {
    auto r = verify_monotone_ivp(TriangulationProfile(barycentric(path(2))), "sd(path2)");
    CHECK(r.verdict == Verdict::pass);
    CHECK(*r.lhs == IntPoly{0, 2});
    CHECK(r.rhs->is_zero());

    CHECK(verify_monotone_ivp(TriangulationProfile(barycentric(twin_stellar_ball())), "sd(twin)").verdict ==
          Verdict::pass);
    CHECK(verify_monotone_ivp(TriangulationProfile(antiprism(cone(cycle(4), "u"))), "antiprism(cone)").verdict ==
          Verdict::pass);
    CHECK(verify_monotone_ivp(TriangulationProfile(barycentric(tri())), "sd(tri)").verdict == Verdict::inapplicable);
}

TEST_CASE("monotonicity for theta-positive triangulations") {
    auto r = verify_monotone_theta_positive(TriangulationProfile(antiprism(tri())), "antiprism");
    CHECK(r.verdict == Verdict::pass);
    CHECK(*r.lhs == IntPoly{0, 2, 2});
    CHECK(r.rhs->is_zero());
    CHECK(is_gamma_positive(*r.lhs - *r.rhs, 3));

    CHECK(verify_monotone_theta_positive(TriangulationProfile(barycentric(tri())), "sd").verdict == Verdict::pass);

    auto inner = antiprism(tri());
    auto comp = compose(barycentric(inner.total()), inner);
    CHECK(verify_monotone_theta_positive(TriangulationProfile(comp), "sd after antiprism").verdict == Verdict::pass);

    CHECK(verify_monotone_theta_positive(TriangulationProfile(identity_triangulation(tri())), "identity").verdict ==
          Verdict::inapplicable);
}

TEST_CASE("monotonicity for sub-balls") {
    auto twin = ball_of(twin_stellar_ball());
    auto same = verify_monotone_subball(twin, twin, "twin");
    CHECK(same.verdict == Verdict::pass);
    CHECK(*same.lhs == *same.rhs);

    for (std::uint64_t i = 0; i < 4; ++i) {
        for (int dim = 1; dim <= 3; ++dim) {
            auto [outer, inner] = nested_balls(41, i, dim);
            auto r = verify_monotone_subball(ball_of(outer.complex), ball_of(inner.complex), outer.name);
            CHECK(r.verdict != Verdict::fail);
        }
    }
}

TEST_CASE("removing a corner of the fourfold edgewise tetrahedron adds x^2") {
    auto outer = ball_of(edgewise(simplex(letters(4)), 4).total());
    CHECK(theta(outer).is_zero());
    const Vertex corner = outer.complex().face_from_labels({"a:4"})[0];
    auto r = verify_vertex_removal(outer, corner, "edgewise4");
    CHECK(r.verdict == Verdict::pass);
    CHECK(*r.lhs == IntPoly{0, 0, 1});

    auto inner = ball_of(delete_vertex(outer.complex(), corner));
    CHECK(theta(inner) == theta(outer) + IntPoly{0, 0, 1});
    // The removal creates a facet with all of its vertices on the boundaries.
    CHECK(verify_monotone_subball(outer, inner, "edgewise4").verdict == Verdict::inapplicable);
}

TEST_CASE("closed form and dominance for theta of sd") {
    for (const auto& base : corpus_bases(3)) {
        auto b = HomologyBall::verify(base.complex);
        if (!b || base.complex.is_empty_complex()) continue;
        INFO(base.name);
        CHECK(verify_sd_theta_closed_form(*b, base.name).verdict == Verdict::pass);
        if (has_interior_vertex_property(b->complex(), b->boundary()))
            CHECK(verify_sd_theta_dominates(*b, base.name).verdict == Verdict::pass);
    }
}

TEST_CASE("flag theta gamma positivity") {
    auto glued = ball_of(glued_octahedra_ball());
    auto r = check_flag_theta_gamma(glued, "glued");
    CHECK(r.verdict == Verdict::inapplicable);
    CHECK_FALSE(r.proven);
    REQUIRE(r.lhs);
    CHECK(*r.lhs == IntPoly{0, 1, 0, 1});
    CHECK(r.detail.find("boundary not induced") != std::string::npos);
    CHECK(r.detail.find("not gamma-positive") != std::string::npos);

    auto cone_ball = ball_of(cone(cross_polytope_boundary(3), "apex"));
    auto c = check_flag_theta_gamma(cone_ball, "cone");
    CHECK(c.verdict == Verdict::pass);
}

TEST_CASE("link gamma inequality") {
    auto oct = cross_polytope_boundary(3);
    for (Vertex v : oct.vertex_set()) {
        auto rs = check_link_gamma(oct, v, "octahedron");
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].verdict == Verdict::pass);
        CHECK(*rs[0].lhs == IntPoly{1});
        CHECK(*rs[0].rhs == IntPoly{1});
        CHECK(rs[1].verdict == Verdict::pass);
    }
    InstanceGenerator gen(43, InstanceClass::flag_sphere, 2, 10);
    for (int i = 0; i < 8; ++i) {
        auto s = gen.next();
        CHECK(s.complex.num_vertices() <= 10);
        for (Vertex v : s.complex.vertex_set())
            for (const auto& r : check_link_gamma(s.complex, v, s.name)) CHECK(r.verdict == Verdict::pass);
    }
    auto notflag = check_link_gamma(boundary_simplex(letters(4)), 0, "tetrahedron");
    CHECK(notflag[0].verdict == Verdict::inapplicable);
}

TEST_CASE("ball properties") {
    auto twin = ball_of(twin_stellar_ball());
    auto rs = ball_property_reports(twin, "twin");
    CHECK(rs.size() >= 10);
    for (const auto& r : rs) {
        INFO(r.identity << ": " << r.detail);
        CHECK(r.verdict != Verdict::fail);
    }
    auto unimodal = std::find_if(rs.begin(), rs.end(),
                                 [](const auto& r) { return r.identity == "induced_boundary_theta_unimodal"; });
    REQUIRE(unimodal != rs.end());
    CHECK(unimodal->verdict == Verdict::inapplicable);
}

TEST_CASE("three-part decomposition and cones") {
    for (const auto& base : corpus_bases(3)) {
        INFO(base.name);
        CHECK(verify_h_sd_three_parts(base.complex, base.name).verdict != Verdict::fail);
        CHECK(verify_cone_h(base.complex, base.name).verdict != Verdict::fail);
    }
    CHECK(verify_h_sd_three_parts(cross_polytope_boundary(3), "octahedron").verdict == Verdict::pass);
}

TEST_CASE("corollaries for corpus triangulations") {
    for (const auto& base : corpus_bases(2)) {
        for (const auto& t : corpus_triangulations(base)) {
            for (const auto& r : triangulation_corollary_reports(TriangulationProfile(t.triangulation), t.antiprism,
                                                                 t.name)) {
                INFO(r.identity << " on " << r.instance << ": " << r.detail);
                CHECK_FALSE(r.defect());
            }
        }
    }
    auto t = simplex(letters(3));
    CHECK(verify_antiprism_local_h_gamma(barycentric(t), "sd").verdict == Verdict::pass);
}

TEST_CASE("report serialization") {
    auto r = verify_locality(TriangulationProfile(antiprism(tri())), "antiprism");
    auto j = nlohmann::json::parse(to_json_line(r));
    CHECK(j["identity"] == "locality");
    CHECK(j["instance"] == "antiprism");
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs"] == nlohmann::json::array({"1", "9", "3"}));

    Summary s;
    s.add(r);
    VerificationReport bad;
    bad.identity = "x";
    bad.verdict = Verdict::fail;
    s.add(bad);
    bad.proven = false;
    s.add(bad);
    CHECK(s.defects == 1);
    CHECK(s.findings == 1);
    auto js = nlohmann::json::parse(s.to_json());
    CHECK(js.is_object());
}

TEST_CASE("scans") {
    SuiteOptions o;
    o.random_count = 2;
    auto zero = run_scan(ScanKind::theta_zero, o);
    std::vector<std::string> listed;
    for (const auto& r : zero.reports) {
        CHECK_FALSE(r.proven);
        if (r.verdict == Verdict::pass) listed.push_back(r.instance);
    }
    auto has = [&](const std::string& name) { return std::find(listed.begin(), listed.end(), name) != listed.end(); };
    CHECK(has("cone_octahedron"));
    CHECK(has("edgewise4(simplex3)"));
    CHECK_FALSE(has("twin_stellar_ball"));
    CHECK(zero.summary.defects == 0);
}

TEST_CASE("suites are deterministic and independent of the thread count") {
    SuiteOptions o;
    o.suite = "conjectures";
    o.seed = 9;
    o.max_dim = 2;
    o.random_count = 2;
    o.threads = 1;
    auto serial = run_suite(o);
    o.threads = 4;
    auto parallel = run_suite(o);
    auto again = run_suite(o);
    REQUIRE(serial.reports.size() == parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
        CHECK(to_json_line(serial.reports[i]) == to_json_line(parallel.reports[i]));
        CHECK(to_json_line(again.reports[i]) == to_json_line(parallel.reports[i]));
    }
    CHECK(serial.summary.defects == 0);

    o.seed = 10;
    auto other = run_suite(o);
    bool differs = other.reports.size() != serial.reports.size();
    for (std::size_t i = 0; !differs && i < serial.reports.size(); ++i)
        differs = to_json_line(other.reports[i]) != to_json_line(serial.reports[i]);
    CHECK(differs);

    o.suite = "nonsense";
    CHECK_THROWS_AS(run_suite(o), PreconditionError);
}

TEST_CASE("instance generators") {
    for (auto cls : {InstanceClass::sphere, InstanceClass::ball, InstanceClass::cohen_macaulay,
                     InstanceClass::flag_sphere, InstanceClass::flag_ball}) {
        for (int dim = 1; dim <= 3; ++dim) {
            InstanceGenerator a(3, cls, dim);
            InstanceGenerator b(3, cls, dim);
            for (std::uint64_t i = 0; i < 3; ++i) {
                auto x = a.next();
                auto y = b.generate(i);
                CHECK(x.name == y.name);
                CHECK(x.complex == y.complex);
                CHECK(x.complex.num_vertices() <= 12);
                CHECK(x.complex.dim() == dim);
            }
        }
    }
    CHECK_THROWS_AS(InstanceGenerator(1, InstanceClass::ball, 4), PreconditionError);
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
}
