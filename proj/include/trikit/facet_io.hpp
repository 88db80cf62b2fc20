#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "trikit/complex.hpp"

namespace trikit {

// Facet-list text format: one facet per line, whitespace-separated labels.
// '#' starts a comment; blank lines are ignored. Parse errors carry the
// 1-based line number.

FacetLabels parse_facet_text(std::string_view text);
SimplicialComplex read_facet_file(const std::filesystem::path& path);

/// Writes facets in lexicographic id order, one per line.
void write_facets(std::ostream& out, const SimplicialComplex& k, std::string_view header = {});
std::string format_facets(const SimplicialComplex& k, std::string_view header = {});
void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& k,
                      std::string_view header = {});

}  // namespace trikit
