#include "thetalab/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thetalab/errors.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/invariants.hpp"
#include "thetalab/io.hpp"
#include "thetalab/subdivision.hpp"
#include "thetalab/suites.hpp"

namespace thetalab {
namespace {

using json = nlohmann::json;

json poly_json(const IntPoly& p) {
    if (p.is_zero()) return json::array({"0"});
    return p.coefficient_strings();
}

json counts_json(const std::vector<std::int64_t>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(std::to_string(x));
    return out;
}

// A facet file, or a triangulation file when a '%' line is present.
struct Input {
    SimplicialComplex complex;
    std::optional<Triangulation> triangulation;
};

bool has_separator(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tok(line);
        std::string a;
        std::string b;
        if ((tok >> a) && a == "%" && !(tok >> b)) return true;
    }
    return false;
}

Input load(const std::string& path) {
    const std::string text = read_text_file(path);
    if (has_separator(text)) {
        auto t = parse_triangulation(text);
        return {t.total(), t};
    }
    return {parse_facets(text), std::nullopt};
}

std::string kind_of(const SimplicialComplex& c) {
    if (c.is_void()) return "void";
    if (c.is_empty_complex()) return "empty";
    return "complex";
}

json classification(const SimplicialComplex& c, const std::optional<SimplicialComplex>& boundary) {
    json j;
    j["pure"] = c.is_void() || is_pure(c);
    j["flag"] = is_flag(c);
    const bool cm = !c.is_void() && is_cohen_macaulay(c);
    j["cohen_macaulay"] = cm;
    j["cohen_macaulay_star"] = cm && is_cohen_macaulay_star(c);
    j["sphere"] = is_homology_sphere(c);
    j["ball"] = boundary.has_value();
    if (boundary && !c.is_empty_complex()) {
        j["boundary_induced"] = is_induced_subcomplex(*boundary, c);
        j["interior_vertex_property"] = has_interior_vertex_property(c, *boundary);
    }
    return j;
}

json theta_class_json(const Triangulation& t) {
    const auto cls = theta_class(t);
    return {{"positive", cls.positive}, {"unimodal", cls.unimodal}, {"gamma_positive", cls.gamma_positive}};
}

int cmd_compute(const std::string& path, bool want_theta, std::ostream& out) {
    const Input in = load(path);
    const auto& c = in.complex;
    json j;
    j["input"] = path;
    j["kind"] = kind_of(c);
    j["dimension"] = c.dimension() ? json(*c.dimension()) : json(nullptr);
    j["vertices"] = c.num_vertices();
    j["facets"] = c.facets().size();
    j["f_vector"] = counts_json(c.f_vector());
    j["h_vector"] = poly_json(h_poly(c));
    const auto boundary = c.is_void() ? std::nullopt : is_homology_ball(c);
    j["classifications"] = classification(c, boundary);
    if (boundary) {
        const IntPoly th = theta(c, *boundary);
        const std::size_t n = c.is_empty_complex() ? 0 : static_cast<std::size_t>(c.dim() + 1);
        j["boundary"] = {{"f_vector", counts_json(boundary->f_vector())}, {"h_vector", poly_json(h_poly(*boundary))}};
        j["theta"] = poly_json(th);
        j["properties"] = {{"theta_nonnegative", is_nonnegative(th)},
                           {"theta_unimodal", is_unimodal(th, n)},
                           {"theta_gamma_positive", is_gamma_positive(th, n)},
                           {"interior_vertices", interior_vertex_count(c, *boundary)}};
    } else if (want_theta) {
        j["theta"] = nullptr;
        j["theta_reason"] = "not a homology ball";
    }
    if (!c.is_void() && is_homology_sphere(c)) {
        json g = json::array();
        for (const auto& x : gamma_poly(c).gamma) g.push_back(x.str());
        j["gamma"] = g;
    }
    if (in.triangulation) {
        const auto& t = *in.triangulation;
        json tj;
        tj["base_f_vector"] = counts_json(t.base().f_vector());
        tj["theta_class"] = theta_class_json(t);
        if (t.base().facets().size() == 1) tj["local_h"] = poly_json(local_h(t));
        j["triangulation"] = tj;
    }
    out << j.dump(2) << '\n';
    return exit_ok;
}

Triangulation apply_kind(const SimplicialComplex& c, const std::string& kind) {
    if (kind == "sd") return barycentric(c);
    if (kind == "antiprism") return antiprism(c);
    if (kind == "identity") return identity_triangulation(c);
    if (kind.rfind("edgewise:", 0) == 0) {
        const std::string arg = kind.substr(9);
        std::size_t used = 0;
        int r = 0;
        try {
            r = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || arg.empty() || r < 1) throw ParseError("edgewise needs a positive integer, got '" + arg + "'");
        return edgewise(c, r);
    }
    if (kind.rfind("stellar:", 0) == 0) {
        std::vector<std::string> labels;
        std::stringstream ss(kind.substr(8));
        std::string item;
        while (std::getline(ss, item, ',')) labels.push_back(item);
        if (labels.empty()) throw ParseError("stellar needs a face, e.g. stellar:a,b");
        Face f;
        try {
            f = c.face_from_labels(labels);
        } catch (const Error& e) {
            throw ParseError(std::string("bad face for stellar: ") + e.what());
        }
        if (f.empty() || !c.contains(f)) throw ParseError("stellar face is not a nonempty face of the input");
        std::string apex = "new";
        while (c.labels().find(apex)) apex += "'";
        return stellar(c, f, apex);
    }
    throw ParseError("unknown subdivision kind '" + kind + "'");
}

int cmd_subdivide(const std::string& path, const std::string& kind, const std::string& out_path, std::ostream& out) {
    const Input in = load(path);
    Triangulation t = apply_kind(in.complex, kind);
    if (in.triangulation) t = compose(t, *in.triangulation);
    const std::string text = format_triangulation(t);
    if (out_path.empty()) {
        out << text;
    } else {
        write_text_file(out_path, text);
    }
    return exit_ok;
}

int cmd_classify(const std::string& path, std::ostream& out) {
    const Input in = load(path);
    const auto& c = in.complex;
    const auto boundary = c.is_void() ? std::nullopt : is_homology_ball(c);
    json j = classification(c, boundary);
    j["input"] = path;
    if (in.triangulation) j["theta_class"] = theta_class_json(*in.triangulation);
    out << j.dump(2) << '\n';
    return exit_ok;
}

int emit(const SuiteResult& r, bool summary_only, std::ostream& out) {
    if (!summary_only)
        for (const auto& rep : r.reports) out << to_json_line(rep) << '\n';
    out << r.summary.to_json() << '\n';
    return r.summary.defects == 0 ? exit_ok : exit_identity_failure;
}

int cmd_tables(std::optional<int> pnk_n, std::optional<int> der_n, int cap, std::ostream& out, std::ostream& err) {
    if (pnk_n.has_value() == der_n.has_value()) {
        err << "tables: give exactly one of --pnk or --derangement\n";
        return exit_usage;
    }
    const int n = pnk_n ? *pnk_n : *der_n;
    if (n < 0 || n > cap) {
        err << "tables: N = " << n << " outside 0.." << cap << '\n';
        return exit_usage;
    }
    if (pnk_n) {
        for (int k = 0; k <= n; ++k) out << pnk(n, k).to_string() << '\n';
    } else {
        out << derangement_poly(n).to_string() << '\n';
    }
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact h-, local h- and theta polynomials of simplicial complexes and triangulations", "theta_lab"};
    app.require_subcommand(1, 1);

    std::string path;
    bool want_theta = false;
    auto* compute = app.add_subcommand("compute", "Invariant report of a facet or triangulation file (JSON)");
    compute->add_option("path", path, "input file")->required();
    compute->add_flag("--theta", want_theta, "always emit a theta field (null with a reason when not a ball)");

    std::string kind;
    std::string out_path;
    auto* sub = app.add_subcommand("subdivide", "Write a triangulation file");
    sub->add_option("path", path, "input file")->required();
    sub->add_option("--kind", kind, "sd | antiprism | identity | stellar:a,b,... | edgewise:r")->required();
    sub->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* classify = app.add_subcommand("classify", "Classifications of a facet or triangulation file (JSON)");
    classify->add_option("path", path, "input file")->required();

    SuiteOptions options;
    bool summary_only = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite; JSON lines then a summary");
    verify->add_option("--suite", options.suite, "all | locality | theta | kms | monotone | conjectures | properties")
        ->capture_default_str();
    verify->add_option("--seed", options.seed, "seed for random instances")->capture_default_str();
    verify->add_option("--max-dim", options.max_dim, "largest base dimension")->capture_default_str();
    verify->add_option("--count", options.random_count, "random instances per class and dimension")
        ->capture_default_str();
    verify->add_option("--threads", options.threads, "worker threads (default: THETA_LAB_THREADS or all cores)");
    verify->add_flag("--summary-only", summary_only, "print only the summary line");

    std::string scan_kind = "theta-zero";
    auto* scan = app.add_subcommand("scan", "Evidence scans for open questions");
    scan->add_option("--kind", scan_kind, "theta-zero | monotone-ivp | real-rooted")->capture_default_str();
    scan->add_option("--seed", options.seed, "seed for random instances")->capture_default_str();
    scan->add_option("--max-dim", options.max_dim, "largest dimension")->capture_default_str();
    scan->add_option("--count", options.random_count, "random instances per dimension")->capture_default_str();
    scan->add_option("--threads", options.threads, "worker threads");
    scan->add_flag("--summary-only", summary_only, "print only the summary line");

    std::optional<int> pnk_n;
    std::optional<int> der_n;
    int cap = 10;
    auto* tables = app.add_subcommand("tables", "Print p_{N,0..N} or d_N, one polynomial per line");
    tables->add_option("--pnk", pnk_n, "N for p_{N,k}, k = 0..N");
    tables->add_option("--derangement", der_n, "N for d_N");
    tables->add_option("--cap", cap, "largest accepted N")->capture_default_str();

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*compute) return cmd_compute(path, want_theta, out);
        if (*sub) return cmd_subdivide(path, kind, out_path, out);
        if (*classify) return cmd_classify(path, out);
        if (*verify) return emit(run_suite(options), summary_only, out);
        if (*scan) {
            ScanKind k{};
            if (scan_kind == "theta-zero") {
                k = ScanKind::theta_zero;
            } else if (scan_kind == "monotone-ivp") {
                k = ScanKind::monotone_ivp;
            } else if (scan_kind == "real-rooted") {
                k = ScanKind::real_rooted;
            } else {
                err << "scan: unknown kind '" << scan_kind << "'\n";
                return exit_usage;
            }
            return emit(run_scan(k, options), summary_only, out);
        }
        if (*tables) return cmd_tables(pnk_n, der_n, cap, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const MalformedFace& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NotAFace& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_identity_failure;
    }
    return exit_usage;
}

}  // namespace thetalab
