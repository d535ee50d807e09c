#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "thetalab/face.hpp"
#include "thetalab/label_table.hpp"

namespace thetalab {

using LabelTablePtr = std::shared_ptr<const LabelTable>;

/// A finite abstract simplicial complex stored by its facets.
///
/// Two degenerate values are distinct: VOID has no faces at all, while EMPTY
/// is {∅}, the (-1)-dimensional sphere. Facets are kept sorted so iteration
/// is deterministic. Values are immutable once constructed.
class SimplicialComplex {
public:
    /// VOID on an empty ground set.
    SimplicialComplex();

    /// Keeps the inclusion-maximal members of `facets`. An empty list yields
    /// VOID and [∅] yields EMPTY.
    static SimplicialComplex from_facets(std::vector<Face> facets, LabelTablePtr labels);

    /// Builds the label table from the labels appearing in `facets`, in order
    /// of first appearance. Throws MalformedFace on a repeated label in a facet.
    static SimplicialComplex from_labelled(const std::vector<std::vector<std::string>>& facets);

    static SimplicialComplex void_complex(LabelTablePtr labels);
    static SimplicialComplex empty_complex(LabelTablePtr labels);

    [[nodiscard]] bool is_void() const noexcept { return facets_.empty(); }
    [[nodiscard]] bool is_empty_complex() const noexcept {
        return facets_.size() == 1 && facets_.front().empty();
    }

    /// std::nullopt for VOID.
    [[nodiscard]] std::optional<int> dimension() const noexcept;
    /// Dimension; throws PreconditionError for VOID.
    [[nodiscard]] int dim() const;

    [[nodiscard]] const std::vector<Face>& facets() const noexcept { return facets_; }
    [[nodiscard]] const Face& vertex_set() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
    [[nodiscard]] const LabelTable& labels() const noexcept { return *labels_; }
    [[nodiscard]] const LabelTablePtr& label_table() const noexcept { return labels_; }

    [[nodiscard]] bool contains(const Face& face) const noexcept;

    /// All faces of dimension d, sorted. Dimension -1 gives [∅] unless VOID.
    [[nodiscard]] std::vector<Face> faces_of_dim(int d) const;
    /// All faces (∅ included for non-VOID), by increasing size.
    [[nodiscard]] std::vector<Face> faces() const;

    /// (f_{-1}, ..., f_{dim}); empty for VOID.
    [[nodiscard]] std::vector<std::int64_t> f_vector() const;

    /// "{a,b}", labels in string order.
    [[nodiscard]] std::string face_label(const Face& face) const;
    [[nodiscard]] Face face_from_labels(const std::vector<std::string>& labels) const;

    /// Same faces, compared through vertex labels when the tables differ.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    SimplicialComplex(std::vector<Face> facets, LabelTablePtr labels);

    std::vector<Face> facets_;
    Face vertices_;
    LabelTablePtr labels_;
};

/// Hash set of every face, for repeated membership queries.
using FaceSet = std::unordered_set<Face, FaceHash>;
FaceSet face_set(const SimplicialComplex& complex);

/// {G \ F : G ∈ Δ, F ⊆ G}. Throws NotAFace if F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// Faces of Δ contained in `vertices`.
SimplicialComplex induced(const SimplicialComplex& complex, const Face& vertices);

/// Rewrites `complex` onto `target`, matching vertices by label. Throws
/// PreconditionError if a label is missing from `target`.
SimplicialComplex translate(const SimplicialComplex& complex, const LabelTablePtr& target);
Face translate_face(const Face& face, const LabelTable& from, const LabelTable& to);

/// Whether every face of `sub` is a face of `complex`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex);

/// Whether Γ = induced(Δ, vertices(Γ)). Throws PreconditionError unless Γ ⊆ Δ.
bool is_induced_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex);

/// Minimal non-faces on the vertex set of Δ.
std::vector<Face> minimal_non_faces(const SimplicialComplex& complex);
bool is_flag(const SimplicialComplex& complex);
bool is_pure(const SimplicialComplex& complex);

/// Δ ∪ {F ∪ {v} : F ∈ Δ} on a fresh vertex labelled `apex`.
SimplicialComplex cone(const SimplicialComplex& complex, std::string_view apex);

/// Union; vertices are matched by label.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

/// All faces not containing v (the antistar of v).
SimplicialComplex delete_vertex(const SimplicialComplex& complex, Vertex v);

/// The subcomplex generated by a subset of the facets.
SimplicialComplex generated_by(const SimplicialComplex& complex, std::vector<Face> facets);

/// The complex 2^F on the label table of `complex`.
SimplicialComplex simplex_on(const SimplicialComplex& complex, const Face& face);

}  // namespace thetalab
