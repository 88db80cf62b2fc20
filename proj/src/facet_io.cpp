#include "trikit/facet_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "trikit/errors.hpp"

namespace trikit {

FacetLabels parse_facet_text(std::string_view text) {
  FacetLabels facets;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream tokens{std::string(line)};
    std::vector<std::string> facet;
    std::set<std::string> seen;
    for (std::string tok; tokens >> tok;) {
      if (!seen.insert(tok).second)
        throw Error(ErrorKind::malformed_facet,
                    "line " + std::to_string(line_no) + ": label '" + tok + "' repeated in facet");
      facet.push_back(std::move(tok));
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (facets.empty()) throw Error(ErrorKind::empty_complex, "no facets found");
  return facets;
}

SimplicialComplex read_facet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return SimplicialComplex::from_facets(parse_facet_text(buf.str()));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_facets(std::ostream& out, const SimplicialComplex& k, std::string_view header) {
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& f : k.facets()) {
    bool first = true;
    for (VertexId v : f) {
      if (!first) out << ' ';
      out << k.label(v);
      first = false;
    }
    out << '\n';
  }
}

std::string format_facets(const SimplicialComplex& k, std::string_view header) {
  std::ostringstream out;
  write_facets(out, k, header);
  return out.str();
}

void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& k,
                      std::string_view header) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write '" + path.string() + "'");
  write_facets(out, k, header);
}

}  // namespace trikit
