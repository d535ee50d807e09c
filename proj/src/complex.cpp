#include "thetalab/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thetalab/errors.hpp"

namespace thetalab {
namespace {

// Keeps the inclusion-maximal members; output sorted lexicographically.
std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    std::vector<Face> kept;
    std::map<Vertex, std::vector<std::size_t>> by_vertex;
    for (auto& f : faces) {
        bool dominated = false;
        if (f.empty()) {
            dominated = !kept.empty();
        } else if (auto it = by_vertex.find(f[0]); it != by_vertex.end()) {
            for (std::size_t k : it->second) {
                if (kept[k].size() > f.size() && f.is_subset_of(kept[k])) {
                    dominated = true;
                    break;
                }
            }
        }
        if (dominated) continue;
        for (Vertex v : f) by_vertex[v].push_back(kept.size());
        kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : labels_(std::make_shared<LabelTable>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Face> facets, LabelTablePtr labels)
    : facets_(std::move(facets)), labels_(std::move(labels)) {
    if (!labels_) labels_ = std::make_shared<LabelTable>();
    std::set<Vertex> vs;
    for (const auto& f : facets_) {
        for (Vertex v : f) {
            if (v >= labels_->size()) throw PreconditionError("vertex id outside label table");
            vs.insert(v);
        }
    }
    vertices_ = Face::from_sorted(std::vector<Vertex>(vs.begin(), vs.end()));
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets, LabelTablePtr labels) {
    return SimplicialComplex(maximalize(std::move(facets)), std::move(labels));
}

SimplicialComplex SimplicialComplex::from_labelled(
    const std::vector<std::vector<std::string>>& facets) {
    auto table = std::make_shared<LabelTable>();
    std::vector<Face> faces;
    for (const auto& labels : facets) {
        std::vector<Vertex> vs;
        for (const auto& l : labels) vs.push_back(table->intern(l));
        faces.emplace_back(std::move(vs));
    }
    return from_facets(std::move(faces), std::move(table));
}

SimplicialComplex SimplicialComplex::void_complex(LabelTablePtr labels) {
    return SimplicialComplex({}, std::move(labels));
}

SimplicialComplex SimplicialComplex::empty_complex(LabelTablePtr labels) {
    return SimplicialComplex({Face{}}, std::move(labels));
}

std::optional<int> SimplicialComplex::dimension() const noexcept {
    if (is_void()) return std::nullopt;
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dim());
    return d;
}

int SimplicialComplex::dim() const {
    auto d = dimension();
    if (!d) throw PreconditionError("the void complex has no dimension");
    return *d;
}

bool SimplicialComplex::contains(const Face& face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return face.is_subset_of(g); });
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<Face> out;
    if (is_void() || d < -1) return out;
    const auto k = static_cast<std::size_t>(d + 1);
    for (const auto& g : facets_) {
        if (g.size() < k) continue;
        auto sub = subfaces_of_size(g, k);
        out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Face> SimplicialComplex::faces() const {
    std::vector<Face> out;
    if (is_void()) return out;
    for (int d = -1; d <= dim(); ++d) {
        auto layer = faces_of_dim(d);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f;
    if (is_void()) return f;
    for (int d = -1; d <= dim(); ++d) f.push_back(static_cast<std::int64_t>(faces_of_dim(d).size()));
    return f;
}

std::string SimplicialComplex::face_label(const Face& face) const {
    // Sorted by label so the text does not depend on vertex numbering.
    std::vector<std::string> parts;
    for (Vertex v : face) parts.emplace_back(labels_->label(v));
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + "}";
}

Face SimplicialComplex::face_from_labels(const std::vector<std::string>& labels) const {
    std::vector<Vertex> vs;
    for (const auto& l : labels) {
        auto id = labels_->find(l);
        if (!id) throw NotAFace("unknown vertex label '" + l + "'");
        vs.push_back(*id);
    }
    return Face(std::move(vs));
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.labels_ == b.labels_ || *a.labels_ == *b.labels_) return a.facets_ == b.facets_;
    auto labelled = [](const SimplicialComplex& c) {
        std::set<std::set<std::string>> out;
        for (const auto& f : c.facets_) {
            std::set<std::string> s;
            for (Vertex v : f) s.insert(c.labels_->label(v));
            out.insert(std::move(s));
        }
        return out;
    };
    return labelled(a) == labelled(b);
}

FaceSet face_set(const SimplicialComplex& complex) {
    auto all = complex.faces();
    return FaceSet(all.begin(), all.end());
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    std::vector<Face> out;
    for (const auto& g : complex.facets())
        if (face.is_subset_of(g)) out.push_back(g.minus(face));
    if (out.empty()) throw NotAFace("link of a non-face " + complex.face_label(face));
    return SimplicialComplex::from_facets(std::move(out), complex.label_table());
}

SimplicialComplex induced(const SimplicialComplex& complex, const Face& vertices) {
    std::vector<Face> out;
    for (const auto& g : complex.facets()) out.push_back(g.intersect(vertices));
    return SimplicialComplex::from_facets(std::move(out), complex.label_table());
}

Face translate_face(const Face& face, const LabelTable& from, const LabelTable& to) {
    std::vector<Vertex> vs;
    vs.reserve(face.size());
    for (Vertex v : face) {
        auto id = to.find(from.label(v));
        if (!id) throw PreconditionError("label '" + from.label(v) + "' missing from target table");
        vs.push_back(*id);
    }
    return Face(std::move(vs));
}

SimplicialComplex translate(const SimplicialComplex& complex, const LabelTablePtr& target) {
    if (complex.label_table() == target) return complex;
    std::vector<Face> out;
    for (const auto& g : complex.facets())
        out.push_back(translate_face(g, complex.labels(), *target));
    return SimplicialComplex::from_facets(std::move(out), target);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex) {
    auto s = translate(sub, complex.label_table());
    return std::all_of(s.facets().begin(), s.facets().end(),
                       [&](const Face& f) { return complex.contains(f); });
}

bool is_induced_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex) {
    if (!is_subcomplex(sub, complex))
        throw PreconditionError("is_induced_subcomplex: not a subcomplex");
    auto s = translate(sub, complex.label_table());
    return induced(complex, s.vertex_set()) == s;
}

std::vector<Face> minimal_non_faces(const SimplicialComplex& complex) {
    std::vector<Face> out;
    if (complex.is_void()) return out;
    const auto all = face_set(complex);
    const Face& verts = complex.vertex_set();
    for (const auto& f : complex.faces()) {
        const Vertex floor = f.empty() ? 0 : f.back() + 1;
        for (Vertex w : verts) {
            if (w < floor) continue;
            Face s = f.with(w);
            if (all.contains(s)) continue;
            bool minimal = true;
            for (Vertex x : s) {
                if (!all.contains(s.without(x))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_flag(const SimplicialComplex& complex) {
    auto mnf = minimal_non_faces(complex);
    return std::all_of(mnf.begin(), mnf.end(), [](const Face& f) { return f.size() == 2; });
}

bool is_pure(const SimplicialComplex& complex) {
    const auto& fs = complex.facets();
    return std::all_of(fs.begin(), fs.end(),
                       [&](const Face& f) { return f.size() == fs.front().size(); });
}

SimplicialComplex cone(const SimplicialComplex& complex, std::string_view apex) {
    if (complex.is_void()) throw PreconditionError("cone over the void complex");
    auto table = std::make_shared<LabelTable>(complex.labels());
    const Vertex v = table->intern(apex);
    if (complex.vertex_set().contains(v))
        throw PreconditionError("cone apex '" + std::string(apex) + "' is already a vertex");
    std::vector<Face> out;
    for (const auto& g : complex.facets()) out.push_back(g.with(v));
    return SimplicialComplex::from_facets(std::move(out), std::move(table));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> out(a.facets());
    if (a.label_table() == b.label_table()) {
        out.insert(out.end(), b.facets().begin(), b.facets().end());
        return SimplicialComplex::from_facets(std::move(out), a.label_table());
    }
    auto table = std::make_shared<LabelTable>(a.labels());
    for (const auto& g : b.facets()) {
        std::vector<Vertex> vs;
        for (Vertex v : g) vs.push_back(table->intern(b.labels().label(v)));
        out.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(std::move(out), std::move(table));
}

SimplicialComplex delete_vertex(const SimplicialComplex& complex, Vertex v) {
    if (!complex.vertex_set().contains(v)) throw NotAFace("delete_vertex: not a vertex");
    std::vector<Face> out;
    for (const auto& g : complex.facets()) out.push_back(g.without(v));
    return SimplicialComplex::from_facets(std::move(out), complex.label_table());
}

SimplicialComplex generated_by(const SimplicialComplex& complex, std::vector<Face> facets) {
    return SimplicialComplex::from_facets(std::move(facets), complex.label_table());
}

SimplicialComplex simplex_on(const SimplicialComplex& complex, const Face& face) {
    return SimplicialComplex::from_facets({face}, complex.label_table());
}

}  // namespace thetalab
