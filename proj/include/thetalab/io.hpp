#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thetalab/complex.hpp"
#include "thetalab/subdivision.hpp"

namespace thetalab {

/// Facet text: one facet per line as whitespace-separated labels, '#' starts
/// a comment line, the lone token '@' is the empty facet. No facets is VOID.
SimplicialComplex parse_facets(std::string_view text);
std::string format_facets(const SimplicialComplex& complex);

/// Triangulation text: the facets of total, a line holding '%', then lines
/// "face -> carrier". Facets and vertices always get a line; any other face
/// gets one only when its carrier differs from the union of its vertex
/// carriers. Faces without a line fall back to that union, or to the
/// intersection of the carriers of the facets containing them when some
/// vertex is missing. The result is checked with carrier_violations().
Triangulation parse_triangulation(std::string_view text);
std::string format_triangulation(const Triangulation& t);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace thetalab
