#include "thetalab/harness.hpp"

#include "json.hpp"

#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/invariants.hpp"

namespace thetalab {
namespace {

using json = nlohmann::json;

VerificationReport make(std::string identity, const std::string& instance) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.instance = instance;
    return r;
}

VerificationReport equality(std::string identity, const std::string& instance, IntPoly lhs, IntPoly rhs) {
    auto r = make(std::move(identity), instance);
    r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

VerificationReport inapplicable(std::string identity, const std::string& instance, std::string why) {
    auto r = make(std::move(identity), instance);
    r.verdict = Verdict::inapplicable;
    r.detail = std::move(why);
    return r;
}

void require(VerificationReport& r, bool ok, const std::string& what) {
    if (ok) return;
    r.verdict = Verdict::fail;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += what;
}

bool unimodal_nonneg(const IntPoly& p) { return is_nonnegative(p) && is_unimodal(p); }

// Peak at n/2 for even n, at (n-1)/2 or (n+1)/2 for odd n.
bool peaks_in_middle(const IntPoly& h, std::size_t n) {
    if (!is_unimodal(h)) return false;
    for (std::size_t k : unimodal_peaks(h)) {
        if (2 * k == n || 2 * k + 1 == n || 2 * k == n + 1) return true;
    }
    return false;
}

IntPoly theta_of_sd(const HomologyBall& ball) {
    auto sd = HomologyBall::verify(barycentric(ball.complex()).total());
    if (!sd) throw ConsistencyError("barycentric subdivision of a ball is not a ball");
    return theta(*sd);
}

bool is_simplex(const SimplicialComplex& c) { return c.facets().size() == 1; }

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inapplicable: return "inapplicable";
    }
    return "?";
}

std::string to_json_line(const VerificationReport& r) {
    json j;
    j["identity"] = r.identity;
    j["instance"] = r.instance;
    j["lhs"] = r.lhs ? json(r.lhs->coefficient_strings()) : json(nullptr);
    j["rhs"] = r.rhs ? json(r.rhs->coefficient_strings()) : json(nullptr);
    j["verdict"] = std::string(to_string(r.verdict));
    j["proven"] = r.proven;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j.dump();
}

TriangulationProfile::TriangulationProfile(Triangulation t) : t_(std::move(t)) {
    for (const auto& f : t_.base().faces()) {
        auto r = restriction(t_, f);
        auto ball = HomologyBall::verify(r.total());
        if (!ball) throw PreconditionError("restriction to " + t_.base().face_label(f) + " is not a homology ball");
        Entry e{h_poly(r.total()), theta(*ball)};
        if (!f.empty()) {
            const bool nonneg = is_nonnegative(e.theta);
            class_.positive = class_.positive && nonneg;
            class_.unimodal = class_.unimodal && nonneg && is_unimodal(e.theta);
            class_.gamma_positive = class_.gamma_positive && is_gamma_positive(e.theta, f.size());
        }
        entries_.emplace(f, std::move(e));
    }
}

const TriangulationProfile::Entry& TriangulationProfile::entry(const Face& f) const {
    auto it = entries_.find(f);
    if (it == entries_.end()) throw NotAFace("not a face of the base complex");
    return it->second;
}

const IntPoly& TriangulationProfile::restriction_h(const Face& f) const { return entry(f).h; }
const IntPoly& TriangulationProfile::restriction_theta(const Face& f) const { return entry(f).theta; }

IntPoly TriangulationProfile::local_h(const Face& f) const {
    IntPoly out;
    for (const auto& g : all_subfaces(f)) {
        const IntPoly& h = entry(g).h;
        if ((f.size() - g.size()) % 2 == 1) {
            out -= h;
        } else {
            out += h;
        }
    }
    return out;
}

VerificationReport verify_locality(const TriangulationProfile& p, const std::string& instance) {
    const auto& base = p.triangulation().base();
    if (!is_pure(base)) return inapplicable("locality", instance, "base not pure");
    IntPoly rhs;
    for (const auto& f : base.faces()) rhs += p.local_h(f) * h_poly(link(base, f));
    return equality("locality", instance, h_poly(p.triangulation().total()), rhs);
}

VerificationReport verify_theta_formula(const TriangulationProfile& p, const std::string& instance) {
    const auto& base = p.triangulation().base();
    if (!is_pure(base)) return inapplicable("theta_formula", instance, "base not pure");
    IntPoly rhs;
    for (const auto& f : base.faces()) rhs += p.restriction_theta(f) * h_sd_via_pnk(link(base, f));
    return equality("theta_formula", instance, h_poly(p.triangulation().total()), rhs);
}

VerificationReport verify_local_h_expansion(const TriangulationProfile& p, const std::string& instance) {
    const auto& base = p.triangulation().base();
    if (!is_simplex(base)) return inapplicable("local_h_theta_expansion", instance, "base not a simplex");
    const Face& v = base.facets().front();
    IntPoly rhs;
    for (const auto& f : all_subfaces(v)) rhs += p.restriction_theta(f) * derangement_poly(v.size() - f.size());
    return equality("local_h_theta_expansion", instance, p.local_h(v), rhs);
}

VerificationReport verify_monotone_ivp(const TriangulationProfile& p, const std::string& instance) {
    const char* id = "monotone_ivp";
    auto base = HomologyBall::verify(p.triangulation().base());
    if (!base) return inapplicable(id, instance, "base not a homology ball");
    if (!has_interior_vertex_property(base->complex(), base->boundary()))
        return inapplicable(id, instance, "precondition: interior vertex property fails");
    auto total = HomologyBall::verify(p.triangulation().total());
    if (!total) throw ConsistencyError("triangulation of a ball is not a ball");
    auto r = make(id, instance);
    r.lhs = theta(*total);
    r.rhs = theta(*base);
    r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport verify_monotone_theta_positive(const TriangulationProfile& p, const std::string& instance) {
    const char* id = "monotone_theta_positive";
    auto base = HomologyBall::verify(p.triangulation().base());
    if (!base) return inapplicable(id, instance, "base not a homology ball");
    const auto& cls = p.theta_class();
    if (!cls.positive) return inapplicable(id, instance, "triangulation not theta positive");
    auto total = HomologyBall::verify(p.triangulation().total());
    if (!total) throw ConsistencyError("triangulation of a ball is not a ball");
    const std::size_t n = base->n();
    auto r = make(id, instance);
    r.lhs = theta(*total);
    r.rhs = theta_of_sd(*base);
    r.verdict = Verdict::pass;
    const IntPoly diff = *r.lhs - *r.rhs;
    require(r, is_nonnegative(diff), "theta below theta(sd)");
    if (cls.unimodal) {
        require(r, unimodal_nonneg(*r.lhs), "theta not unimodal");
        require(r, unimodal_nonneg(diff), "difference not unimodal");
    }
    if (cls.gamma_positive) {
        require(r, is_gamma_positive(*r.lhs, n), "theta not gamma-positive");
        require(r, is_gamma_positive(diff, n), "difference not gamma-positive");
    }
    if (r.verdict == Verdict::pass) {
        r.detail = std::string("checked inequality") + (cls.unimodal ? ", unimodality" : "") +
                   (cls.gamma_positive ? ", gamma-positivity" : "");
    }
    return r;
}

VerificationReport verify_monotone_subball(const HomologyBall& outer, const HomologyBall& inner,
                                           const std::string& instance) {
    const char* id = "monotone_subball";
    bool hypothesis = false;
    try {
        hypothesis = no_facet_on_union_boundaries(outer, inner);
    } catch (const PreconditionError& e) {
        return inapplicable(id, instance, e.what());
    }
    if (!hypothesis) return inapplicable(id, instance, "some facet has all vertices on the boundaries");
    auto r = make(id, instance);
    r.lhs = theta(outer);
    r.rhs = theta(inner);
    r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport verify_vertex_removal(const HomologyBall& outer, Vertex v, const std::string& instance) {
    const char* id = "vertex_removal_defect";
    const std::size_t n = outer.n();
    if (n < 4) return inapplicable(id, instance, "dimension below 3");
    if (outer.complex().facets().size() < 2) return inapplicable(id, instance, "a single facet");
    std::size_t containing = 0;
    for (const auto& f : outer.complex().facets()) containing += f.contains(v) ? 1 : 0;
    if (containing != 1) return inapplicable(id, instance, "vertex not in a unique facet");
    auto inner = HomologyBall::verify(delete_vertex(outer.complex(), v));
    if (!inner) {
        auto r = make(id, instance);
        r.verdict = Verdict::fail;
        r.detail = "vertex deletion is not a homology ball";
        return r;
    }
    IntPoly tail;
    for (std::size_t i = 2; i + 2 <= n; ++i) tail += IntPoly::monomial(1, i);
    return equality(id, instance, theta(*inner), theta(outer) + tail);
}

VerificationReport verify_sd_theta_closed_form(const HomologyBall& ball, const std::string& instance) {
    const char* id = "sd_theta_closed_form";
    if (ball.complex().is_empty_complex()) return inapplicable(id, instance, "empty ball");
    return equality(id, instance, theta_sd_formula(h_poly(ball.complex()), ball.n()), theta_of_sd(ball));
}

VerificationReport verify_sd_theta_dominates(const HomologyBall& ball, const std::string& instance) {
    const char* id = "sd_theta_dominates";
    if (ball.complex().is_empty_complex()) return inapplicable(id, instance, "empty ball");
    auto r = make(id, instance);
    r.lhs = theta_of_sd(ball);
    r.rhs = theta(ball);
    r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_flag_theta_gamma(const HomologyBall& ball, const std::string& instance) {
    const char* id = "flag_theta_gamma";
    const IntPoly th = theta(ball);
    auto skip = [&](std::string why) {
        auto r = inapplicable(id, instance, std::move(why) + "; theta = " + th.to_string() +
                                                (is_gamma_positive(th, ball.n()) ? " (gamma-positive)"
                                                                                 : " (not gamma-positive)"));
        r.proven = false;
        r.lhs = th;
        return r;
    };
    if (!is_flag(ball.complex())) return skip("not flag");
    if (!is_induced_subcomplex(ball.boundary(), ball.complex())) return skip("boundary not induced");
    auto r = make(id, instance);
    r.proven = false;
    r.lhs = th;
    auto g = gamma_vector(th, ball.n());
    if (g) r.rhs = g->as_poly();
    r.verdict = g && g->is_nonnegative() ? Verdict::pass : Verdict::fail;
    if (r.verdict == Verdict::fail) r.detail = "counterexample candidate";
    return r;
}

std::vector<VerificationReport> check_link_gamma(const SimplicialComplex& sphere, Vertex v,
                                                 const std::string& instance) {
    const std::string tag = instance + " at " + sphere.labels().label(v);
    if (!is_flag(sphere) || !is_homology_sphere(sphere)) {
        auto a = inapplicable("link_gamma_inequality", tag, "not a flag homology sphere");
        a.proven = false;
        return {a, inapplicable("link_theta_equivalence", tag, "not a flag homology sphere")};
    }
    const auto lk = link(sphere, Face{v});
    const GammaVector g_sphere = gamma_poly(sphere);
    const GammaVector g_link = gamma_poly(lk);
    auto ineq = make("link_gamma_inequality", tag);
    ineq.proven = false;
    ineq.lhs = g_sphere.as_poly();
    ineq.rhs = g_link.as_poly();
    ineq.verdict = dominates(*ineq.lhs, *ineq.rhs) ? Verdict::pass : Verdict::fail;
    if (ineq.verdict == Verdict::fail) ineq.detail = "counterexample candidate";

    auto equiv = make("link_theta_equivalence", tag);
    auto ball = HomologyBall::verify(delete_vertex(sphere, v));
    equiv.verdict = Verdict::pass;
    if (!ball) {
        require(equiv, false, "deletion is not a homology ball");
        return {ineq, equiv};
    }
    const IntPoly th = theta(*ball);
    equiv.lhs = th;
    equiv.rhs = h_poly(sphere) - IntPoly{1, 1} * h_poly(lk);
    require(equiv, *equiv.lhs == *equiv.rhs, "theta(deletion) != h(sphere) - (1+x) h(link)");
    require(equiv, ball->boundary() == lk, "boundary of the deletion is not the link");
    require(equiv, is_flag(ball->complex()), "deletion not flag");
    require(equiv, is_induced_subcomplex(ball->boundary(), ball->complex()), "boundary not induced");
    const bool ball_verdict = is_gamma_positive(th, ball->n());
    require(equiv, ball_verdict == (ineq.verdict == Verdict::pass), "verdicts disagree");
    return {ineq, equiv};
}

std::vector<VerificationReport> ball_property_reports(const HomologyBall& ball, const std::string& instance) {
    std::vector<VerificationReport> out;
    const auto& c = ball.complex();
    const auto& bd = ball.boundary();
    if (c.is_empty_complex()) return out;
    const std::size_t n = ball.n();
    const IntPoly h = h_poly(c);
    const IntPoly th = theta(ball);
    const auto interior = interior_faces(c, bd);
    long long interior_vertices = 0;
    long long interior_edges = 0;
    for (const auto& f : interior) {
        interior_vertices += f.size() == 1 ? 1 : 0;
        interior_edges += f.size() == 2 ? 1 : 0;
    }

    out.push_back(equality("theta_symmetry", instance, reverse(th, n), th));
    out.push_back(equality("theta_constant_term", instance, IntPoly::constant(th.coeff(0)), IntPoly{}));
    out.push_back(equality("theta_linear_coefficient", instance, IntPoly::constant(th.coeff(1)),
                           IntPoly::constant(interior_vertices - 1)));
    if (n == 2) {
        out.push_back(equality("low_dim_theta", instance, th, IntPoly{0, interior_vertices - 1}));
    } else if (n == 3) {
        out.push_back(
            equality("low_dim_theta", instance, th, IntPoly{0, interior_vertices - 1, interior_vertices - 1}));
    }
    if (n >= 2) {
        const auto f0 = static_cast<long long>(c.num_vertices());
        const auto nn = static_cast<long long>(n);
        out.push_back(equality("quadratic_theta_coefficient", instance, IntPoly::constant(th.coeff(2)),
                               IntPoly::constant(interior_edges - f0 - (nn - 2) * interior_vertices + nn - 1)));
    }
    out.push_back(equality("h_top_vanishes", instance, IntPoly::constant(h.coeff(n)), IntPoly{}));
    {
        Integer total = 0;
        for (const auto& a : h.coefficients()) total += a;
        out.push_back(equality("h_sum_facets", instance, IntPoly::constant(total),
                               IntPoly::constant(static_cast<long long>(c.facets().size()))));
    }
    {
        const auto d = symmetric_decomposition(h, n - 1);
        auto r = equality("boundary_decomposition", instance, d.a + IntPoly::monomial(1, 1) * d.b,
                          h_poly(bd) + th);
        require(r, d.a == h_poly(bd), "first part differs from h(boundary)");
        require(r, d.b == th.divided_by_x_pow(1), "second part differs from theta/x");
        out.push_back(std::move(r));
    }
    {
        bool top_heavy = true;
        for (std::size_t i = 0; 2 * i <= n - 1; ++i) top_heavy = top_heavy && h.coeff(i) <= h.coeff(n - 1 - i);
        auto r = make("theta_unimodal_iff_top_heavy", instance);
        const bool uni = is_unimodal(th, n);
        r.verdict = uni == top_heavy ? Verdict::pass : Verdict::fail;
        r.detail = std::string("unimodal=") + (uni ? "true" : "false") + " top_heavy=" + (top_heavy ? "true" : "false");
        out.push_back(std::move(r));
    }
    {
        auto r = make("alternating_iff_unimodal_parts", instance);
        const bool alt = is_alternatingly_increasing(h, n);
        const bool parts = is_unimodal(th, n) && is_unimodal(h_poly(bd), n - 1);
        r.verdict = alt == parts ? Verdict::pass : Verdict::fail;
        r.detail = std::string("alternating=") + (alt ? "true" : "false") + " parts=" + (parts ? "true" : "false");
        out.push_back(std::move(r));
    }
    if (has_interior_vertex_property(c, bd)) {
        auto r = make("ivp_theta_positive", instance);
        r.lhs = th;
        r.verdict = Verdict::pass;
        require(r, is_nonnegative(th), "theta negative");
        std::size_t links = 0;
        for (const auto& f : bd.faces()) {
            if (f.empty()) continue;
            ++links;
            const IntPoly tl = theta(link(c, f), link(bd, f));
            require(r, is_nonnegative(tl), "theta of link of " + c.face_label(f) + " negative");
        }
        if (r.verdict == Verdict::pass) r.detail = std::to_string(links) + " boundary links checked";
        out.push_back(std::move(r));
    } else {
        out.push_back(inapplicable("ivp_theta_positive", instance, "interior vertex property fails"));
    }
    if (is_induced_subcomplex(bd, c)) {
        auto r = make("induced_boundary_theta_unimodal", instance);
        r.lhs = th;
        r.verdict = is_unimodal(th, n) ? Verdict::pass : Verdict::fail;
        out.push_back(std::move(r));
    } else {
        out.push_back(inapplicable("induced_boundary_theta_unimodal", instance, "boundary not induced"));
    }
    return out;
}

VerificationReport verify_h_sd_three_parts(const SimplicialComplex& complex, const std::string& instance) {
    const char* id = "h_sd_three_parts";
    if (complex.is_void() || complex.is_empty_complex()) return inapplicable(id, instance, "degenerate complex");
    if (!is_cohen_macaulay(complex)) return inapplicable(id, instance, "not Cohen-Macaulay");
    const std::size_t n = static_cast<std::size_t>(complex.dim() + 1);
    const IntPoly h = h_poly(complex);
    IntPoly low;   // center (n-1)/2
    IntPoly mid;   // center n/2
    IntPoly high;  // center (n+1)/2
    const IntPoly x = IntPoly::monomial(1, 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const bool upper = 2 * k >= n;
        const auto d = symmetric_decomposition(pnk(n, upper ? k : n - k), n);
        const IntPoly hk = IntPoly::constant(h.coeff(k));
        if (upper) {
            mid += hk * d.a;
            high += hk * x * d.b;
        } else {
            low += hk * d.b;
            mid += hk * d.a;
        }
    }
    auto r = equality(id, instance, low + mid + high, h_poly(barycentric(complex).total()));
    auto part_ok = [](const IntPoly& p, std::size_t center2) {
        return is_nonnegative(p) && is_symmetric(p, center2) && is_unimodal(p);
    };
    require(r, n == 0 || part_ok(low, n - 1), "part centered at (n-1)/2 fails");
    require(r, part_ok(mid, n), "part centered at n/2 fails");
    require(r, part_ok(high, n + 1), "part centered at (n+1)/2 fails");
    require(r, peaks_in_middle(*r.rhs, n), "h(sd) peak misplaced");
    return r;
}

VerificationReport verify_cone_h(const SimplicialComplex& complex, const std::string& instance) {
    std::string apex = "apex";
    while (complex.labels().find(apex)) apex += "'";
    return equality("cone_h_invariant", instance, h_poly(cone(complex, apex)), h_poly(complex));
}

std::vector<VerificationReport> triangulation_corollary_reports(const TriangulationProfile& p, bool antiprism,
                                                                const std::string& instance) {
    std::vector<VerificationReport> out;
    const auto& t = p.triangulation();
    const auto& base = t.base();
    if (base.is_void() || base.is_empty_complex()) return out;
    const std::size_t n = static_cast<std::size_t>(base.dim() + 1);
    const IntPoly h = h_poly(t.total());
    const auto& cls = p.theta_class();
    const bool cm = is_cohen_macaulay(base);
    const bool simplex_base = is_simplex(base);
    const bool sphere = is_homology_sphere(base);
    const bool cm_star = cm && is_cohen_macaulay_star(base);
    const bool ball = is_homology_ball(base).has_value();
    const std::string prefix = antiprism ? "antiprism_" : "";
    const bool unimodal = antiprism || cls.unimodal;
    const bool gamma = antiprism || cls.gamma_positive;

    auto check = [&](const std::string& id, bool ok, IntPoly lhs, std::string what) {
        auto r = make(prefix + id, instance);
        r.lhs = std::move(lhs);
        r.verdict = ok ? Verdict::pass : Verdict::fail;
        if (!ok) r.detail = std::move(what);
        out.push_back(std::move(r));
    };

    if (antiprism) check("theta_gamma_positive", cls.gamma_positive, h, "a restriction is not theta gamma-positive");
    if (!antiprism && cm && cls.positive) {
        auto r = make("h_sd_minimal", instance);
        r.lhs = h;
        r.rhs = h_sd_via_pnk(base);
        r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
        out.push_back(std::move(r));
    }
    const Face whole = simplex_base ? base.facets().front() : Face{};
    const IntPoly ell = simplex_base ? p.local_h(whole) : IntPoly{};
    if (!antiprism && simplex_base && cls.positive) {
        auto r = make("local_h_sd_minimal", instance);
        r.lhs = ell;
        r.rhs = derangement_poly(n);
        r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
        out.push_back(std::move(r));
    }
    if (cm && unimodal) check("h_unimodal_peak", peaks_in_middle(h, n), h, "not unimodal with a middle peak");
    if (simplex_base && unimodal) check("local_h_unimodal", unimodal_nonneg(ell), ell, "local h not unimodal");
    if (simplex_base && gamma) check("local_h_gamma", is_gamma_positive(ell, n), ell, "local h not gamma-positive");
    if (sphere && unimodal) check("sphere_h_unimodal", unimodal_nonneg(h), h, "h not unimodal");
    if (sphere && gamma) check("sphere_h_gamma", is_gamma_positive(h, n), h, "h not gamma-positive");
    auto decomposition = [&](const std::string& id, std::size_t m) {
        const auto d = symmetric_decomposition(h, m);
        if (unimodal)
            check(id + "_unimodal", unimodal_nonneg(d.a) && unimodal_nonneg(d.b), h, "a part is not unimodal");
        if (gamma)
            check(id + "_gamma", is_gamma_positive(d.a, m) && (m == 0 || is_gamma_positive(d.b, m - 1)), h,
                  "a part is not gamma-positive");
    };
    if (cm_star) decomposition("cm_star_decomposition", n);
    if (ball && n >= 1) decomposition("ball_decomposition", n - 1);
    return out;
}

VerificationReport verify_antiprism_local_h_gamma(const Triangulation& t, const std::string& instance) {
    const char* id = "antiprism_local_h_gamma";
    if (!is_simplex(t.base())) return inapplicable(id, instance, "base not a simplex");
    const auto composed = compose(antiprism(t.total()), t);
    auto r = make(id, instance);
    r.lhs = local_h(composed);
    const std::size_t n = t.base().facets().front().size();
    auto g = gamma_vector(*r.lhs, n);
    if (g) r.rhs = g->as_poly();
    r.verdict = g && g->is_nonnegative() ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport scan_monotone_ivp_pair(const HomologyBall& outer, const HomologyBall& inner,
                                          const std::string& instance) {
    const char* id = "open_monotone_ivp_pair";
    auto skip = [&](std::string why) {
        auto r = inapplicable(id, instance, std::move(why));
        r.proven = false;
        return r;
    };
    if (outer.n() != inner.n()) return skip("dimensions differ");
    if (!is_subcomplex(inner.complex(), outer.complex())) return skip("not nested");
    if (!has_interior_vertex_property(outer.complex(), outer.boundary()) ||
        !has_interior_vertex_property(inner.complex(), inner.boundary()))
        return skip("interior vertex property fails");
    auto r = make(id, instance);
    r.proven = false;
    r.lhs = theta(outer);
    r.rhs = theta(inner);
    r.verdict = dominates(*r.lhs, *r.rhs) ? Verdict::pass : Verdict::fail;
    if (r.verdict == Verdict::fail) r.detail = "theta decreases";
    return r;
}

std::vector<VerificationReport> scan_local_h_real_rooted(const Triangulation& t, const std::string& instance) {
    std::vector<VerificationReport> out;
    if (!is_simplex(t.base())) {
        auto r = inapplicable("open_local_h_real_rooted", instance, "base not a simplex");
        r.proven = false;
        out.push_back(std::move(r));
        return out;
    }
    auto record = [&](const std::string& id, const Triangulation& outer) {
        auto r = make(id, instance);
        r.proven = false;
        r.lhs = local_h(compose(outer, t));
        const bool rr = is_real_rooted(*r.lhs);
        r.verdict = rr ? Verdict::pass : Verdict::fail;
        r.detail = std::to_string(count_distinct_real_roots(*r.lhs)) + " distinct real roots";
        out.push_back(std::move(r));
    };
    record("open_local_h_sd_real_rooted", barycentric(t.total()));
    record("open_local_h_antiprism_real_rooted", antiprism(t.total()));
    return out;
}

void Summary::add(const VerificationReport& r) {
    auto& c = by_identity[r.identity];
    switch (r.verdict) {
        case Verdict::pass: ++c.pass; break;
        case Verdict::fail: ++c.fail; break;
        case Verdict::inapplicable: ++c.inapplicable; break;
    }
    if (r.defect()) ++defects;
    if (!r.proven && r.verdict == Verdict::fail) ++findings;
}

std::string Summary::to_json() const {
    json j;
    json ids = json::object();
    for (const auto& [id, c] : by_identity) {
        ids[id] = {{"pass", c.pass}, {"fail", c.fail}, {"inapplicable", c.inapplicable}};
    }
    j["summary"] = ids;
    j["defects"] = defects;
    j["findings"] = findings;
    return j.dump();
}

}  // namespace thetalab
