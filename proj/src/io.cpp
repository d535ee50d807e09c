#include "thetalab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "thetalab/errors.hpp"

namespace thetalab {
namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_blank_or_comment(const std::vector<std::string>& toks) {
    return toks.empty() || toks.front().front() == '#';
}

std::vector<std::string> face_tokens(std::vector<std::string> toks, std::size_t line_no) {
    if (toks.size() == 1 && toks.front() == "@") return {};
    for (const auto& t : toks) {
        if (t == "@") throw ParseError("line " + std::to_string(line_no) + ": '@' must stand alone");
    }
    return toks;
}

std::string face_text(const SimplicialComplex& c, const Face& f) {
    if (f.empty()) return "@";
    std::string out;
    for (Vertex v : f) {
        if (!out.empty()) out += ' ';
        out += c.labels().label(v);
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

SimplicialComplex complex_from_lines(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> order;
    std::map<std::string, bool> seen;
    for (const auto& f : facets) {
        for (const auto& l : f) {
            if (seen.emplace(l, true).second) order.push_back(l);
        }
    }
    auto table = std::make_shared<LabelTable>(order);
    std::vector<Face> faces;
    for (const auto& f : facets) {
        std::vector<Vertex> vs;
        for (const auto& l : f) vs.push_back(*table->find(l));
        faces.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(std::move(faces), table);
}

Face lookup(const SimplicialComplex& c, const std::vector<std::string>& labels, std::size_t line_no) {
    try {
        return c.face_from_labels(labels);
    } catch (const Error& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
}

}  // namespace

SimplicialComplex parse_facets(std::string_view text) {
    std::vector<std::vector<std::string>> facets;
    std::size_t line_no = 0;
    for (const auto& line : split_lines(text)) {
        ++line_no;
        auto toks = tokens(line);
        if (is_blank_or_comment(toks)) continue;
        try {
            facets.push_back(face_tokens(std::move(toks), line_no));
        } catch (const MalformedFace& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    try {
        return complex_from_lines(facets);
    } catch (const MalformedFace& e) {
        throw ParseError(e.what());
    }
}

std::string format_facets(const SimplicialComplex& complex) {
    std::string out;
    for (const auto& f : complex.facets()) out += face_text(complex, f) + '\n';
    return out;
}

Triangulation parse_triangulation(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t sep = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens(lines[i]);
        if (toks.size() == 1 && toks.front() == "%") {
            sep = i;
            break;
        }
    }
    if (sep == lines.size()) throw ParseError("missing '%' separator line");

    std::string head;
    for (std::size_t i = 0; i < sep; ++i) head += lines[i] + '\n';
    SimplicialComplex total = parse_facets(head);

    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
    for (std::size_t i = sep + 1; i < lines.size(); ++i) {
        auto toks = tokens(lines[i]);
        if (is_blank_or_comment(toks)) continue;
        std::vector<std::string> lhs;
        std::vector<std::string> rhs;
        bool arrow = false;
        for (auto& t : toks) {
            if (t == "->") {
                if (arrow) throw ParseError("line " + std::to_string(i + 1) + ": repeated '->'");
                arrow = true;
            } else {
                (arrow ? rhs : lhs).push_back(std::move(t));
            }
        }
        if (!arrow) throw ParseError("line " + std::to_string(i + 1) + ": expected 'face -> carrier'");
        raw.emplace_back(face_tokens(std::move(lhs), i + 1), face_tokens(std::move(rhs), i + 1));
    }

    // The base is generated by the carriers of the facets of total.
    std::vector<std::vector<std::string>> base_facets;
    for (const auto& [lhs, rhs] : raw) base_facets.push_back(rhs);
    if (!total.is_void() && base_facets.empty()) throw ParseError("no carrier lines");
    SimplicialComplex base = complex_from_lines(base_facets);

    std::unordered_map<Face, Face, FaceHash> explicit_carriers;
    std::size_t line_no = 0;
    for (const auto& [lhs, rhs] : raw) {
        ++line_no;
        Face f = lookup(total, lhs, line_no);
        if (!total.contains(f)) throw ParseError("'" + total.face_label(f) + "' is not a face of the triangulation");
        Face c = lookup(base, rhs, line_no);
        auto [it, fresh] = explicit_carriers.emplace(f, c);
        if (!fresh && it->second != c) throw ParseError("conflicting carriers for " + total.face_label(f));
    }
    for (const auto& facet : total.facets()) {
        if (!explicit_carriers.contains(facet))
            throw ParseError("facet " + total.face_label(facet) + " has no carrier line");
    }

    std::vector<std::pair<Face, Face>> table;
    for (const auto& f : total.faces()) {
        if (auto it = explicit_carriers.find(f); it != explicit_carriers.end()) {
            table.emplace_back(f, it->second);
            continue;
        }
        bool all_vertices = true;
        Face from_vertices;
        for (Vertex v : f) {
            auto it = explicit_carriers.find(Face{v});
            if (it == explicit_carriers.end()) {
                all_vertices = false;
                break;
            }
            from_vertices = from_vertices.unite(it->second);
        }
        if (all_vertices) {
            table.emplace_back(f, from_vertices);
            continue;
        }
        std::optional<Face> meet;
        for (const auto& facet : total.facets()) {
            if (!f.is_subset_of(facet)) continue;
            const Face& c = explicit_carriers.at(facet);
            meet = meet ? meet->intersect(c) : c;
        }
        table.emplace_back(f, *meet);
    }
    auto t = Triangulation::from_table(std::move(base), std::move(total), std::move(table));
    if (auto problems = carrier_violations(t); !problems.empty()) {
        throw ParseError("invalid carriers: " + problems.front());
    }
    return t;
}

std::string format_triangulation(const Triangulation& t) {
    const auto& total = t.total();
    const auto& base = t.base();
    std::string out = format_facets(total);
    out += "%\n";
    auto line = [&](const Face& f) {
        out += face_text(total, f) + " -> " + face_text(base, t.carrier(f)) + '\n';
    };
    for (const auto& facet : total.facets()) line(facet);
    for (Vertex v : total.vertex_set()) line(Face{v});
    for (const auto& [f, c] : t.carriers()) {
        if (f.size() < 2) continue;
        if (std::binary_search(total.facets().begin(), total.facets().end(), f)) continue;
        Face from_vertices;
        for (Vertex v : f) from_vertices = from_vertices.unite(t.carrier(Face{v}));
        if (from_vertices != c) line(f);
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace thetalab
