#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetalab/complex.hpp"

namespace thetalab {

/// Coefficient field for homology: exact rationals, or F_p for a prime p.
/// Prime fields are faster but only detect homology in that characteristic.
class FieldChoice {
public:
    static FieldChoice rationals() { return FieldChoice(0); }
    /// Throws PreconditionError if p is not prime.
    static FieldChoice prime(std::uint32_t p);

    [[nodiscard]] bool is_rational() const noexcept { return characteristic_ == 0; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return characteristic_; }

private:
    explicit FieldChoice(std::uint32_t p) : characteristic_(p) {}
    std::uint32_t characteristic_;
};

/// Order in which boundary-matrix columns are reduced. The ranks do not
/// depend on it; `reversed` exists to check exactly that.
enum class EliminationOrder { natural, reversed };

/// Reduced Betti numbers b_{-1}, ..., b_{dim}.
struct HomologyProfile {
    int top_dim = -1;
    std::vector<std::uint64_t> betti;  // betti[i + 1] = b_i

    /// b_i; zero outside -1..top_dim.
    [[nodiscard]] std::uint64_t operator()(int i) const;
    /// Σ (-1)^i b_i
    [[nodiscard]] std::int64_t reduced_euler() const;
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Reduced homology of a non-VOID complex.
HomologyProfile betti(const SimplicialComplex& complex, FieldChoice field = FieldChoice::rationals(),
                      EliminationOrder order = EliminationOrder::natural);

/// Σ_i (-1)^i f_i over all faces including ∅ (reduced Euler characteristic).
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

bool is_cohen_macaulay(const SimplicialComplex& complex, FieldChoice field = FieldChoice::rationals());

/// Removing any one facet (keeping its proper faces) leaves a Cohen-Macaulay
/// complex of the same dimension. Defined only on Cohen-Macaulay complexes;
/// throws PreconditionError otherwise.
bool is_cohen_macaulay_star(const SimplicialComplex& complex,
                            FieldChoice field = FieldChoice::rationals());

/// Subcomplex generated by ridges lying in exactly one facet. VOID when no
/// such ridge exists. Throws PreconditionError for non-pure or EMPTY input.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& complex);

bool is_homology_sphere(const SimplicialComplex& complex, FieldChoice field = FieldChoice::rationals());

/// The verified boundary when `complex` is a homology ball, std::nullopt
/// otherwise. EMPTY is accepted as the ball 2^∅ with VOID boundary.
std::optional<SimplicialComplex> is_homology_ball(const SimplicialComplex& complex,
                                                  FieldChoice field = FieldChoice::rationals());

/// A homology ball together with its verified boundary. Only obtainable
/// through verification.
class HomologyBall {
public:
    static std::optional<HomologyBall> verify(SimplicialComplex complex,
                                              FieldChoice field = FieldChoice::rationals());

    [[nodiscard]] const SimplicialComplex& complex() const noexcept { return complex_; }
    [[nodiscard]] const SimplicialComplex& boundary() const noexcept { return boundary_; }
    /// n, where the ball has dimension n - 1.
    [[nodiscard]] std::size_t n() const { return static_cast<std::size_t>(complex_.dim() + 1); }

private:
    HomologyBall(SimplicialComplex c, SimplicialComplex b) : complex_(std::move(c)), boundary_(std::move(b)) {}
    SimplicialComplex complex_;
    SimplicialComplex boundary_;
};

/// Faces of Δ not in ∂Δ, sorted by size then lexicographically.
std::vector<Face> interior_faces(const SimplicialComplex& complex, const SimplicialComplex& boundary);

/// Every facet has a vertex off the boundary.
bool has_interior_vertex_property(const SimplicialComplex& complex, const SimplicialComplex& boundary);

/// No facet of the outer ball has all of its vertices in ∂(inner) ∪ ∂(outer).
/// Throws PreconditionError unless inner ⊆ outer and both have equal dimension.
bool no_facet_on_union_boundaries(const HomologyBall& outer, const HomologyBall& inner);

}  // namespace thetalab
