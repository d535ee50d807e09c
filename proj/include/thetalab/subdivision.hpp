#pragma once

#include <functional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "thetalab/complex.hpp"

namespace thetalab {

/// A complex `total` triangulating `base`, with the carrier of every face of
/// `total` (∅ included) stored explicitly.
class Triangulation {
public:
    using CarrierRule = std::function<Face(const Face&)>;

    /// Tabulates `rule` over every face of `total`.
    static Triangulation from_rule(SimplicialComplex base, SimplicialComplex total, const CarrierRule& rule);
    /// Takes explicit (face, carrier) pairs covering every face of `total`.
    static Triangulation from_table(SimplicialComplex base, SimplicialComplex total,
                                    std::vector<std::pair<Face, Face>> carriers);

    [[nodiscard]] const SimplicialComplex& base() const noexcept { return base_; }
    [[nodiscard]] const SimplicialComplex& total() const noexcept { return total_; }

    /// Throws NotAFace if `face` is not a face of total().
    [[nodiscard]] const Face& carrier(const Face& face) const;
    /// (face, carrier) pairs sorted by face size then lexicographically.
    [[nodiscard]] const std::vector<std::pair<Face, Face>>& carriers() const noexcept { return table_; }

private:
    Triangulation(SimplicialComplex base, SimplicialComplex total, std::vector<std::pair<Face, Face>> table);

    SimplicialComplex base_;
    SimplicialComplex total_;
    std::vector<std::pair<Face, Face>> table_;
    std::unordered_map<Face, std::size_t, FaceHash> index_;
};

/// Violations of the carrier axioms, one message per problem; empty when the
/// triangulation is sound. Checks that carriers are base faces, that ∅ maps to
/// ∅, monotonicity, and that carriers contain the carriers of their vertices.
std::vector<std::string> carrier_violations(const Triangulation& t);

Triangulation identity_triangulation(const SimplicialComplex& complex);

/// Chains of nonempty faces; vertex labels "{a,b}"; carrier = top element.
Triangulation barycentric(const SimplicialComplex& complex);

/// Pointed faces (F, v); vertex labels "({a,b},a)"; carrier = largest F.
Triangulation antiprism(const SimplicialComplex& complex);

/// Stellar subdivision on a nonempty face with a fresh vertex `apex`.
/// New faces {v} ∪ E ∪ E' get carrier F ∪ E'.
Triangulation stellar(const SimplicialComplex& complex, const Face& face, std::string_view apex);

/// r-fold edgewise subdivision with respect to the vertex-id order. Vertices
/// are lattice points x with Σ x = r supported on a face; labels "a:2+b:2".
Triangulation edgewise(const SimplicialComplex& complex, int r);

/// Faces of total() carried inside `face`, as a triangulation of 2^face.
Triangulation restriction(const Triangulation& t, const Face& face);

/// Composes `outer` (a triangulation of inner.total()) with `inner`.
Triangulation compose(const Triangulation& outer, const Triangulation& inner);

struct ThetaClass {
    bool positive = true;
    bool unimodal = true;
    bool gamma_positive = true;
};

/// Theta positivity / unimodality / γ-positivity of every restriction to a
/// nonempty base face. Throws PreconditionError if a restriction is not a
/// homology ball.
ThetaClass theta_class(const Triangulation& t);

}  // namespace thetalab
