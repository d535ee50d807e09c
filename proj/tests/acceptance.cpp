// Runs the ten acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/harness.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/instances.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/subdivision.hpp"
#include "thetalab/suites.hpp"

using namespace thetalab;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note << "failed: ";
            else note << "; ";
            note << what;
            ok = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

HomologyBall must_ball(const SimplicialComplex& c) {
    auto b = HomologyBall::verify(c);
    if (!b) throw ConsistencyError("expected a homology ball");
    return *b;
}

// Every ball among the corpus bases, together with the total complexes of
// their corpus triangulations.
std::vector<std::pair<std::string, HomologyBall>> corpus_balls() {
    std::vector<std::pair<std::string, HomologyBall>> out;
    for (const auto& base : corpus_bases(3)) {
        auto b = HomologyBall::verify(base.complex);
        if (!b) continue;
        out.emplace_back(base.name, *b);
        if (base.complex.is_empty_complex()) continue;
        for (const auto& t : corpus_triangulations(base)) {
            if (t.name.rfind("identity", 0) == 0) continue;
            out.emplace_back(t.name, must_ball(t.triangulation.total()));
        }
    }
    return out;
}

// Counts of pass / fail per identity over a batch of reports.
struct Tally {
    std::map<std::string, IdentityCounts> counts;
    void add(const VerificationReport& r) {
        auto& c = counts[r.identity];
        if (r.verdict == Verdict::pass) ++c.pass;
        if (r.verdict == Verdict::fail) ++c.fail;
        if (r.verdict == Verdict::inapplicable) ++c.inapplicable;
    }
    void require(Outcome& o, const std::string& id) const {
        auto it = counts.find(id);
        if (it == counts.end() || it->second.pass == 0) {
            o.expect(false, id + " never checked");
            return;
        }
        o.expect(it->second.fail == 0, id + ": " + std::to_string(it->second.fail) + " failures");
    }
    std::string brief(const std::vector<std::string>& ids) const {
        std::string s;
        for (const auto& id : ids) {
            auto it = counts.find(id);
            s += (s.empty() ? "" : ", ") + id + " " + std::to_string(it == counts.end() ? 0 : it->second.pass);
        }
        return s;
    }
};

void criterion_pnk(Outcome& o) {
    const std::vector<IntPoly> p3 = {{1, 4, 1}, {0, 4, 2}, {0, 2, 4}, {0, 1, 4, 1}};
    const std::vector<IntPoly> p4 = {{1, 11, 11, 1}, {0, 8, 14, 2}, {0, 4, 16, 4}, {0, 2, 14, 8}, {0, 1, 11, 11, 1}};
    for (std::size_t k = 0; k <= 3; ++k) o.expect(pnk(3, k) == p3[k], "p_{3," + std::to_string(k) + "}");
    for (std::size_t k = 0; k <= 4; ++k) o.expect(pnk(4, k) == p4[k], "p_{4," + std::to_string(k) + "}");
    o.note << "9 polynomials";
}

void criterion_twin(Outcome& o) {
    auto ball = must_ball(twin_stellar_ball());
    const auto th = theta(ball);
    o.expect(h_poly(ball.complex()) == IntPoly{1, 3, 2, 2}, "h");
    o.expect(h_poly(ball.boundary()) == IntPoly{1, 2, 2, 1}, "h of boundary");
    o.expect(th == IntPoly{0, 1, 0, 1}, "theta");
    o.expect(!is_unimodal(th), "theta unimodal");
    o.expect(!is_induced_subcomplex(ball.boundary(), ball.complex()), "boundary induced");
    o.expect(has_interior_vertex_property(ball.complex(), ball.boundary()), "interior vertex property");
    o.note << "theta = " << th.to_string();
}

void criterion_glued(Outcome& o) {
    auto ball = must_ball(glued_octahedra_ball());
    const auto th = theta(ball);
    o.expect(is_flag(ball.complex()), "flag");
    o.expect(h_poly(ball.complex()) == IntPoly{1, 7, 6, 2}, "h");
    o.expect(h_poly(ball.boundary()) == IntPoly{1, 6, 6, 1}, "h of boundary");
    o.expect(th == IntPoly{0, 1, 0, 1}, "theta");
    o.expect(!is_gamma_positive(th, ball.n()), "theta gamma-positive");
    o.expect(ball.complex().num_vertices() == 11, "11 vertices");
    o.expect(ball.complex().facets().size() == 16, "16 facets");
    o.expect(ball.boundary().num_vertices() == 9, "boundary 9 vertices");
    o.expect(ball.boundary().facets().size() == 14, "boundary 14 facets");
    o.note << "11 vertices, 16 facets, boundary 9/14";
}

void criterion_identities(Outcome& o) {
    const auto t0 = Clock::now();
    Tally tally;
    std::size_t triangulations = 0;
    for (const auto& base : corpus_bases(3)) {
        for (const auto& t : corpus_triangulations(base)) {
            ++triangulations;
            TriangulationProfile p(t.triangulation);
            tally.add(verify_locality(p, t.name));
            tally.add(verify_theta_formula(p, t.name));
            tally.add(verify_local_h_expansion(p, t.name));
        }
    }
    tally.require(o, "locality");
    tally.require(o, "theta_formula");
    tally.require(o, "local_h_theta_expansion");
    const double secs = seconds_since(t0);
    o.expect(secs < 300, "took longer than 5 minutes");
    o.note << triangulations << " triangulations; "
           << tally.brief({"locality", "theta_formula", "local_h_theta_expansion"});
}

void criterion_theta_basics(Outcome& o, const std::vector<std::pair<std::string, HomologyBall>>& balls) {
    Tally tally;
    for (const auto& [name, ball] : balls)
        for (const auto& r : ball_property_reports(ball, name)) tally.add(r);
    for (const char* id :
         {"theta_symmetry", "theta_constant_term", "theta_linear_coefficient", "low_dim_theta",
          "quadratic_theta_coefficient"})
        tally.require(o, id);
    o.note << balls.size() << " balls; "
           << tally.brief({"theta_symmetry", "low_dim_theta", "quadratic_theta_coefficient"});
}

void criterion_monotone(Outcome& o, const std::vector<std::pair<std::string, HomologyBall>>& balls) {
    Tally tally;
    for (const auto& base : corpus_bases(3)) {
        for (const auto& t : corpus_triangulations(base)) {
            TriangulationProfile p(t.triangulation);
            tally.add(verify_monotone_ivp(p, t.name));
            tally.add(verify_monotone_theta_positive(p, t.name));
        }
    }
    for (int dim = 1; dim <= 3; ++dim)
        for (std::uint64_t i = 0; i < 4; ++i) {
            auto [outer, inner] = nested_balls(17, i, dim);
            tally.add(verify_monotone_subball(must_ball(outer.complex), must_ball(inner.complex), outer.name));
        }
    for (const auto& [name, ball] : balls) {
        if (ball.complex().is_empty_complex()) continue;
        tally.add(verify_sd_theta_closed_form(ball, name));
    }
    auto outer = must_ball(edgewise(simplex(letters(4)), 4).total());
    const Vertex corner = outer.complex().face_from_labels({"a:4"})[0];
    auto removal = verify_vertex_removal(outer, corner, "edgewise4(simplex3)");
    tally.add(removal);
    auto inner = must_ball(delete_vertex(outer.complex(), corner));
    o.expect(theta(outer).is_zero(), "theta of the edgewise tetrahedron");
    o.expect(theta(inner) == theta(outer) + IntPoly{0, 0, 1}, "corner removal adds x^2");

    for (const char* id :
         {"monotone_ivp", "monotone_theta_positive", "monotone_subball", "sd_theta_closed_form",
          "vertex_removal_defect"})
        tally.require(o, id);
    o.note << tally.brief({"monotone_ivp", "monotone_theta_positive", "monotone_subball", "sd_theta_closed_form"})
           << "; corner removal theta = " << theta(inner).to_string();
}

void criterion_antiprism_real_rooted(Outcome& o) {
    const auto t0 = Clock::now();
    std::string roots;
    for (int v = 1; v <= 5; ++v) {
        auto ball = must_ball(antiprism(simplex(letters(v))).total());
        const auto th = theta(ball);
        o.expect(is_real_rooted(th), "|V| = " + std::to_string(v));
        if (v == 5) roots = th.to_string();
    }
    const double secs = seconds_since(t0);
    o.expect(secs < 120, "took longer than 2 minutes");
    o.note << "|V| <= 5; theta for |V| = 5: " << roots;
}

void criterion_derangements(Outcome& o) {
    for (int n = 0; n <= 7; ++n) {
        o.expect(derangement_poly(static_cast<std::size_t>(n)) == oracle::derangement_by_excedance(n),
                 "d_" + std::to_string(n));
    }
    for (int n = 0; n <= 5; ++n) {
        o.expect(derangement_poly_direct(static_cast<std::size_t>(n)) == oracle::derangement_by_excedance(n),
                 "direct d_" + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 8; ++n) o.expect(is_gamma_positive(derangement_poly(n), n), "gamma of d_" + std::to_string(n));
    o.note << "d_8 = " << derangement_poly(8).to_string();
}

void criterion_conjectures(Outcome& o) {
    SuiteOptions opts;
    opts.suite = "conjectures";
    opts.seed = 7;
    auto result = run_suite(opts);
    o.expect(result.summary.defects == 0, "harness defects");
    std::size_t checked = 0;
    for (const auto& [id, c] : result.summary.by_identity) checked += c.pass + c.fail;
    o.expect(checked > 0, "nothing checked");
    o.note << checked << " checks, " << result.summary.findings << " counterexample candidates";
    for (const auto& r : result.reports)
        if (!r.proven && r.verdict == Verdict::fail) o.note << "; candidate " << r.identity << " on " << r.instance;
}

void criterion_decomposition(Outcome& o, const std::vector<std::pair<std::string, HomologyBall>>& balls) {
    std::size_t n = 0;
    for (const auto& [name, ball] : balls) {
        if (ball.complex().is_empty_complex()) continue;
        auto d = symmetric_decomposition(h_poly(ball.complex()), ball.n() - 1);
        o.expect(d.a == h_poly(ball.boundary()), name + " boundary part");
        o.expect(d.b.shifted(1) == theta(ball), name + " theta part");
        ++n;
    }
    o.note << n << " balls";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, HomologyBall>> balls = corpus_balls();
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"p_{n,k} tables for n = 3, 4", criterion_pnk},
        {"twin stellar ball", criterion_twin},
        {"glued octahedra flag ball", criterion_glued},
        {"locality, theta formula and local h expansion on the corpus", criterion_identities},
        {"theta symmetry and low-degree coefficients", [&](Outcome& o) { criterion_theta_basics(o, balls); }},
        {"monotonicity and the sd closed form", [&](Outcome& o) { criterion_monotone(o, balls); }},
        {"theta of antiprism simplices is real-rooted", criterion_antiprism_real_rooted},
        {"derangement polynomials", criterion_derangements},
        {"flag gamma conjecture scan", criterion_conjectures},
        {"boundary decomposition of h for balls", [&](Outcome& o) { criterion_decomposition(o, balls); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
        std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
                  << secs << ") " << o.note.str() << std::endl;
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
