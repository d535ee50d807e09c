#pragma once

#include <cstddef>
#include <vector>

#include "thetalab/complex.hpp"
#include "thetalab/homology.hpp"
#include "thetalab/poly.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

/// Σ f_{i-1} x^i (1-x)^{n-i}, n = dim + 1. Zero for VOID, 1 for EMPTY.
IntPoly h_poly(const SimplicialComplex& complex);

/// Same transform applied to an arbitrary face-count vector f_{-1}..f_{n-1}.
IntPoly h_from_f(const std::vector<std::int64_t>& f, std::size_t n);

/// h-polynomial of the interior Δ \ ∂Δ. Cross-checked against x^n h(Δ, 1/x);
/// disagreement throws ConsistencyError.
IntPoly h_interior(const SimplicialComplex& complex, const SimplicialComplex& boundary);

/// h(Δ) - h(∂Δ), checked against the partial-sum formula in the h-vector of
/// Δ. Disagreement throws ConsistencyError. EMPTY with VOID boundary gives 1.
IntPoly theta(const SimplicialComplex& complex, const SimplicialComplex& boundary);
IntPoly theta(const HomologyBall& ball);

/// θ from h(Δ) alone: Σ_{i=1}^{n-1} (h_{n-1}+...+h_{n-i} - h_0-...-h_{i-1}) x^i.
IntPoly theta_from_h(const IntPoly& h, std::size_t n);

/// Σ_{F ⊆ V} (-1)^{|V \ F|} h(Γ_F). Base must be a single simplex.
IntPoly local_h(const Triangulation& t);

/// γ-vector of the h-polynomial of a homology sphere. Throws
/// ConsistencyError if h is not symmetric.
GammaVector gamma_poly(const SimplicialComplex& sphere);

/// Σ_k h_k(Δ) p_{n,k}, checked against h of the barycentric subdivision.
IntPoly h_sd_via_pnk(const SimplicialComplex& complex);

/// θ(sd(Δ)) from h(Δ) via Σ_i (h_n+...+h_{n-i} + x(h_n+...+h_{i+1})) p_{n-1,i},
/// checked against the directly computed θ of the barycentric subdivision.
IntPoly theta_sd_closed_form(const HomologyBall& ball);

/// Same sum without the cross-check.
IntPoly theta_sd_formula(const IntPoly& h, std::size_t n);

/// Number of vertices of Δ not on ∂Δ.
std::size_t interior_vertex_count(const SimplicialComplex& complex, const SimplicialComplex& boundary);

/// Local h-polynomial d_n of the barycentric subdivision of an (n-1)-simplex.
/// Uses that the restriction to a k-subset is sd(2^[k]), whose f-vector is a
/// chain count, so no subdivision is materialized.
IntPoly derangement_poly(std::size_t n);

/// Same quantity as local_h(barycentric(simplex)), materializing everything.
/// Practical for n <= 6.
IntPoly derangement_poly_direct(std::size_t n);

}  // namespace thetalab
