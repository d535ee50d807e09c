#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/homology.hpp"
#include "thetalab/poly.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

enum class Verdict { pass, fail, inapplicable };
std::string_view to_string(Verdict v);

/// Outcome of checking one claimed relation on one instance.
struct VerificationReport {
    std::string identity;
    std::string instance;
    std::optional<IntPoly> lhs;
    std::optional<IntPoly> rhs;
    Verdict verdict = Verdict::inapplicable;
    /// False for conjectures and open questions: a failure there is a
    /// finding, not a defect.
    bool proven = true;
    std::string detail;

    [[nodiscard]] bool defect() const noexcept { return proven && verdict == Verdict::fail; }
};

/// One JSON object per line; coefficients as decimal strings.
std::string to_json_line(const VerificationReport& report);

/// Restrictions of a triangulation to every base face, with their h- and
/// theta polynomials, computed once and shared by the identity checks.
class TriangulationProfile {
public:
    /// Throws PreconditionError if some restriction is not a homology ball.
    explicit TriangulationProfile(Triangulation t);

    [[nodiscard]] const Triangulation& triangulation() const noexcept { return t_; }
    [[nodiscard]] const IntPoly& restriction_h(const Face& f) const;
    [[nodiscard]] const IntPoly& restriction_theta(const Face& f) const;
    /// ℓ_F(T_F) by inclusion-exclusion over the cached restrictions.
    [[nodiscard]] IntPoly local_h(const Face& f) const;
    [[nodiscard]] const ThetaClass& theta_class() const noexcept { return class_; }

private:
    struct Entry {
        IntPoly h;
        IntPoly theta;
    };
    const Entry& entry(const Face& f) const;

    Triangulation t_;
    std::unordered_map<Face, Entry, FaceHash> entries_;
    ThetaClass class_;
};

// Exact identities over a triangulation.
VerificationReport verify_locality(const TriangulationProfile& p, const std::string& instance);
VerificationReport verify_theta_formula(const TriangulationProfile& p, const std::string& instance);
VerificationReport verify_local_h_expansion(const TriangulationProfile& p, const std::string& instance);

// Monotonicity.
VerificationReport verify_monotone_ivp(const TriangulationProfile& p, const std::string& instance);
VerificationReport verify_monotone_theta_positive(const TriangulationProfile& p, const std::string& instance);
VerificationReport verify_monotone_subball(const HomologyBall& outer, const HomologyBall& inner,
                                           const std::string& instance);
/// Removing the star of a vertex lying in a unique facet of an (n-1)-ball,
/// n >= 4, adds x^2 + ... + x^{n-2} to theta.
VerificationReport verify_vertex_removal(const HomologyBall& outer, Vertex v, const std::string& instance);
/// Closed form for θ(sd(Δ)) in terms of h(Δ) against the direct computation.
VerificationReport verify_sd_theta_closed_form(const HomologyBall& ball, const std::string& instance);
VerificationReport verify_sd_theta_dominates(const HomologyBall& ball, const std::string& instance);

// Conjectural gamma-positivity.
VerificationReport check_flag_theta_gamma(const HomologyBall& ball, const std::string& instance);
/// γ(Δ) >= γ(link v), plus the equivalence with the ball Δ \ v. Returns the
/// inequality report followed by the equivalence report.
std::vector<VerificationReport> check_link_gamma(const SimplicialComplex& sphere, Vertex v,
                                                 const std::string& instance);

/// Theta symmetry, low-degree coefficients, the boundary decomposition of h
/// and the inequality-chain equivalences, on one ball.
std::vector<VerificationReport> ball_property_reports(const HomologyBall& ball, const std::string& instance);

/// h(sd(Δ)) as a sum of three nonnegative symmetric unimodal parts, built
/// from the symmetric decompositions of p_{n,k}; Δ Cohen-Macaulay.
VerificationReport verify_h_sd_three_parts(const SimplicialComplex& complex, const std::string& instance);
VerificationReport verify_cone_h(const SimplicialComplex& complex, const std::string& instance);

/// Consequences for h(Δ') and ℓ_V(Γ) of theta positivity, unimodality and
/// γ-positivity. With `antiprism` set the antiprism-specific forms are
/// checked without consulting the computed theta class.
std::vector<VerificationReport> triangulation_corollary_reports(const TriangulationProfile& p, bool antiprism,
                                                                const std::string& instance);
/// ℓ_V(sd_A(Γ)) is γ-positive for a triangulation Γ of a simplex.
VerificationReport verify_antiprism_local_h_gamma(const Triangulation& t, const std::string& instance);

// Scans recording evidence on open questions.
/// Same dimension, both with the interior vertex property: does θ grow?
VerificationReport scan_monotone_ivp_pair(const HomologyBall& outer, const HomologyBall& inner,
                                          const std::string& instance);
/// Real-rootedness of ℓ_V(sd(Γ)) and ℓ_V(sd_A(Γ)).
std::vector<VerificationReport> scan_local_h_real_rooted(const Triangulation& t, const std::string& instance);

struct IdentityCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t inapplicable = 0;
};

struct Summary {
    std::map<std::string, IdentityCounts> by_identity;
    std::size_t defects = 0;
    std::size_t findings = 0;  // failures of unproven claims

    void add(const VerificationReport& r);
    [[nodiscard]] std::string to_json() const;
};

}  // namespace thetalab
