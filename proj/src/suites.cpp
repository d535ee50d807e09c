#include "thetalab/suites.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "thetalab/errors.hpp"
#include "thetalab/generators.hpp"
#include "thetalab/instances.hpp"
#include "thetalab/invariants.hpp"

namespace thetalab {
namespace {

using Task = std::function<std::vector<VerificationReport>()>;

VerificationReport harness_error(const std::string& instance, const std::exception& e) {
    VerificationReport r;
    r.identity = "harness_error";
    r.instance = instance;
    r.verdict = Verdict::fail;
    r.detail = e.what();
    return r;
}

bool wants(const std::string& suite, const char* part) { return suite == "all" || suite == part; }

struct Plan {
    std::vector<std::string> names;
    std::vector<Task> tasks;

    void add(std::string name, Task t) {
        names.push_back(std::move(name));
        tasks.push_back(std::move(t));
    }
};

std::vector<NamedComplex> random_instances(const SuiteOptions& o, InstanceClass cls, int min_dim) {
    std::vector<NamedComplex> out;
    for (int d = min_dim; d <= std::min(3, o.max_dim); ++d) {
        InstanceGenerator g(o.seed, cls, d);
        for (std::size_t i = 0; i < o.random_count; ++i) out.push_back(g.next());
    }
    return out;
}

std::vector<NamedComplex> corpus_balls(int max_dim) {
    std::vector<NamedComplex> out;
    for (auto& b : corpus_bases(max_dim))
        if (is_homology_ball(b.complex)) out.push_back(std::move(b));
    return out;
}

HomologyBall must_ball(const SimplicialComplex& c) {
    auto b = HomologyBall::verify(c);
    if (!b) throw ConsistencyError("instance is not a homology ball");
    return *b;
}

void plan_identities(Plan& plan, const SuiteOptions& o) {
    const bool loc = wants(o.suite, "locality");
    const bool th = wants(o.suite, "theta");
    const bool kms = wants(o.suite, "kms");
    const bool mono = wants(o.suite, "monotone");
    const bool props = wants(o.suite, "properties");
    if (!(loc || th || kms || mono || props)) return;
    for (const auto& base : corpus_bases(o.max_dim)) {
        plan.add("triangulations(" + base.name + ")", [=] {
            std::vector<VerificationReport> out;
            for (const auto& nt : corpus_triangulations(base)) {
                try {
                    TriangulationProfile p(nt.triangulation);
                    if (loc) out.push_back(verify_locality(p, nt.name));
                    if (th) out.push_back(verify_theta_formula(p, nt.name));
                    if (kms) out.push_back(verify_local_h_expansion(p, nt.name));
                    if (mono) {
                        out.push_back(verify_monotone_ivp(p, nt.name));
                        out.push_back(verify_monotone_theta_positive(p, nt.name));
                    }
                    if (props) {
                        for (auto& r : triangulation_corollary_reports(p, nt.antiprism, nt.name))
                            out.push_back(std::move(r));
                        if (nt.triangulation.base().facets().size() == 1 &&
                            nt.triangulation.total().facets().size() <= 64)
                            out.push_back(verify_antiprism_local_h_gamma(nt.triangulation, nt.name));
                    }
                } catch (const std::exception& e) {
                    out.push_back(harness_error(nt.name, e));
                }
            }
            return out;
        });
    }
}

void plan_properties(Plan& plan, const SuiteOptions& o) {
    if (!wants(o.suite, "properties")) return;
    auto balls = corpus_balls(o.max_dim);
    for (auto& b : random_instances(o, InstanceClass::ball, 1)) balls.push_back(std::move(b));
    for (const auto& b : balls) {
        plan.add(b.name, [b] {
            std::vector<VerificationReport> out = ball_property_reports(must_ball(b.complex), b.name);
            out.push_back(verify_cone_h(b.complex, b.name));
            return out;
        });
    }
    auto cms = corpus_bases(std::min(o.max_dim, 3));
    for (auto& c : random_instances(o, InstanceClass::cohen_macaulay, 1)) cms.push_back(std::move(c));
    for (auto& c : random_instances(o, InstanceClass::sphere, 1)) cms.push_back(std::move(c));
    for (const auto& c : cms) {
        plan.add(c.name, [c] {
            return std::vector<VerificationReport>{verify_h_sd_three_parts(c.complex, c.name)};
        });
    }
}

void plan_monotone(Plan& plan, const SuiteOptions& o) {
    if (!wants(o.suite, "monotone")) return;
    auto balls = corpus_balls(o.max_dim);
    for (auto& b : random_instances(o, InstanceClass::ball, 1)) balls.push_back(std::move(b));
    for (const auto& b : balls) {
        plan.add(b.name, [b] {
            const auto ball = must_ball(b.complex);
            std::vector<VerificationReport> out{verify_sd_theta_closed_form(ball, b.name),
                                                verify_sd_theta_dominates(ball, b.name)};
            out.push_back(verify_monotone_subball(ball, ball, b.name + " in itself"));
            if (ball.n() >= 4) {
                for (Vertex v : b.complex.vertex_set())
                    out.push_back(verify_vertex_removal(ball, v, b.name + " minus " + b.complex.labels().label(v)));
            }
            return out;
        });
    }
    if (o.max_dim >= 3) {
        plan.add("edgewise4(simplex3)", [] {
            const auto e = edgewise(simplex(letters(4)), 4).total();
            const auto ball = must_ball(e);
            const Vertex corner = *e.labels().find("a:4");
            return std::vector<VerificationReport>{verify_vertex_removal(ball, corner, "edgewise4(simplex3) minus a:4")};
        });
    }
    for (int d = 1; d <= std::min(3, o.max_dim); ++d) {
        for (std::size_t i = 0; i < o.random_count; ++i) {
            plan.add("nested", [seed = o.seed, d, i] {
                auto [outer, inner] = nested_balls(seed, i, d);
                return std::vector<VerificationReport>{
                    verify_monotone_subball(must_ball(outer.complex), must_ball(inner.complex), outer.name)};
            });
        }
    }
}

void plan_conjectures(Plan& plan, const SuiteOptions& o) {
    if (!wants(o.suite, "conjectures")) return;
    std::vector<NamedComplex> spheres;
    for (int d = 1; d <= std::min(3, o.max_dim); ++d) spheres.push_back({"cross" + std::to_string(d + 1), cross_polytope_boundary(d + 1)});
    for (auto& s : random_instances(o, InstanceClass::flag_sphere, 1)) spheres.push_back(std::move(s));
    for (const auto& s : spheres) {
        plan.add(s.name, [s] {
            std::vector<VerificationReport> out;
            for (Vertex v : s.complex.vertex_set())
                for (auto& r : check_link_gamma(s.complex, v, s.name)) out.push_back(std::move(r));
            return out;
        });
    }
    std::vector<NamedComplex> balls;
    for (auto& b : random_instances(o, InstanceClass::flag_ball, 1)) balls.push_back(std::move(b));
    for (const auto& b : corpus_balls(o.max_dim)) {
        balls.push_back(b);
        if (b.complex.dim() <= 2) balls.push_back({"sd(" + b.name + ")", barycentric(b.complex).total()});
    }
    for (const auto& b : balls) {
        plan.add(b.name, [b] {
            return std::vector<VerificationReport>{check_flag_theta_gamma(must_ball(b.complex), b.name)};
        });
    }
}

SuiteResult execute(const Plan& plan, const SuiteOptions& o) {
    const std::size_t threads = o.threads ? o.threads : thread_budget();
    auto parts = parallel_reports(plan.tasks.size(), threads, [&](std::size_t i) {
        try {
            return plan.tasks[i]();
        } catch (const std::exception& e) {
            return std::vector<VerificationReport>{harness_error(plan.names[i], e)};
        }
    });
    SuiteResult out;
    for (auto& part : parts) {
        for (auto& r : part) {
            out.summary.add(r);
            out.reports.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

std::size_t thread_budget() {
    if (const char* env = std::getenv("THETA_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::vector<VerificationReport>> parallel_reports(
    std::size_t count, std::size_t threads, const std::function<std::vector<VerificationReport>(std::size_t)>& task) {
    std::vector<std::vector<VerificationReport>> out(count);
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = task(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = task(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

SuiteResult run_suite(const SuiteOptions& options) {
    static const char* known[] = {"all", "locality", "theta", "kms", "monotone", "conjectures", "properties"};
    if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return options.suite == k; }))
        throw PreconditionError("unknown suite '" + options.suite + "'");
    if (options.max_dim < 0) throw PreconditionError("max-dim must be nonnegative");
    Plan plan;
    plan_identities(plan, options);
    plan_properties(plan, options);
    plan_monotone(plan, options);
    plan_conjectures(plan, options);
    return execute(plan, options);
}

SuiteResult run_scan(ScanKind kind, const SuiteOptions& o) {
    Plan plan;
    switch (kind) {
        case ScanKind::theta_zero: {
            std::vector<NamedComplex> balls = corpus_balls(o.max_dim);
            for (auto& b : random_instances(o, InstanceClass::ball, 1)) balls.push_back(std::move(b));
            for (const auto& b : corpus_bases(std::min(o.max_dim, 3) - 1)) {
                if (is_homology_sphere(b.complex)) balls.push_back({"cone(" + b.name + ")", cone(b.complex, "apex")});
            }
            if (o.max_dim >= 3) balls.push_back({"edgewise4(simplex3)", edgewise(simplex(letters(4)), 4).total()});
            for (const auto& b : balls) {
                plan.add(b.name, [b] {
                    VerificationReport r;
                    r.identity = "open_theta_zero";
                    r.instance = b.name;
                    r.proven = false;
                    r.lhs = theta(must_ball(b.complex));
                    r.verdict = r.lhs->is_zero() ? Verdict::pass : Verdict::inapplicable;
                    r.detail = r.lhs->is_zero() ? "theta = 0" : "theta = " + r.lhs->to_string();
                    return std::vector<VerificationReport>{r};
                });
            }
            break;
        }
        case ScanKind::monotone_ivp: {
            for (int d = 1; d <= std::min(3, o.max_dim); ++d) {
                for (std::size_t i = 0; i < o.random_count; ++i) {
                    plan.add("nested", [seed = o.seed, d, i] {
                        auto [outer, inner] = nested_balls(seed, i, d);
                        return std::vector<VerificationReport>{scan_monotone_ivp_pair(
                            must_ball(outer.complex), must_ball(inner.complex), outer.name)};
                    });
                }
            }
            break;
        }
        case ScanKind::real_rooted: {
            for (int d = 1; d <= std::min(2, o.max_dim); ++d) {
                NamedComplex base{"simplex" + std::to_string(d), simplex(letters(d + 1))};
                for (const auto& nt : corpus_triangulations(base)) {
                    plan.add(nt.name, [nt] { return scan_local_h_real_rooted(nt.triangulation, nt.name); });
                }
            }
            break;
        }
    }
    return execute(plan, o);
}

}  // namespace thetalab
