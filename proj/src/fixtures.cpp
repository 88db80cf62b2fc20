#include "trikit/fixtures.hpp"

#include <cstdlib>
#include <filesystem>

#include "trikit/errors.hpp"
#include "trikit/facet_io.hpp"

namespace trikit {

namespace {

constexpr int kMaxFixtureDim = 12;

int require_param(const std::optional<int>& p, const char* name, const std::string& fixture) {
  if (!p)
    throw Error(ErrorKind::unknown_fixture,
                "fixture '" + fixture + "' needs parameter '" + name + "'");
  return *p;
}

std::vector<std::string> numbered(const std::vector<int>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(std::to_string(v));
  return out;
}

// All k-subsets of {1..n} in lexicographic order.
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TRIKIT_DATA_DIR")) return env;
#ifdef TRIKIT_DATA_DIR
  return TRIKIT_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace

SimplicialComplex boundary_simplex(int d) {
  if (d < 0 || d > kMaxFixtureDim)
    throw Error(ErrorKind::dimension, "boundary_simplex needs 0 <= d <= 12");
  std::vector<std::vector<int>> sets;
  subsets(d + 2, d + 1, sets);
  FacetLabels facets;
  for (const auto& s : sets) facets.push_back(numbered(s));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cross_polytope(int d) {
  if (d < 0 || d > kMaxFixtureDim)
    throw Error(ErrorKind::dimension, "cross_polytope needs 0 <= d <= 12");
  const int pairs = d + 1;
  FacetLabels facets;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<int> f;
    for (int j = 0; j < pairs; ++j) f.push_back(2 * j + 1 + static_cast<int>((mask >> j) & 1u));
    facets.push_back(numbered(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cyclic_polytope_boundary(int n, int d) {
  if (d < 2 || d > kMaxFixtureDim || n < d + 1 || n > 64)
    throw Error(ErrorKind::dimension, "cyclic polytope needs 2 <= d <= 12 and d+1 <= n <= 64");
  // Gale's evenness condition: between any two non-members, the members
  // of the facet come in an even number.
  std::vector<std::vector<int>> sets;
  subsets(n, d, sets);
  FacetLabels facets;
  for (const auto& s : sets) {
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int v : s) in[static_cast<std::size_t>(v)] = true;
    bool ok = true;
    int prev_out = -1;
    int between = 0;
    for (int v = 1; v <= n && ok; ++v) {
      if (in[static_cast<std::size_t>(v)]) {
        ++between;
      } else {
        if (prev_out != -1 && between % 2 != 0) ok = false;
        prev_out = v;
        between = 0;
      }
    }
    if (ok) facets.push_back(numbered(s));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets({{"1", "2", "4"}, {"1", "2", "6"}, {"1", "3", "5"},
                                         {"1", "3", "6"}, {"1", "4", "5"}, {"2", "3", "4"},
                                         {"2", "3", "5"}, {"2", "5", "6"}, {"3", "4", "6"},
                                         {"4", "5", "6"}});
}

SimplicialComplex torus_7() {
  FacetLabels facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back(numbered({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1}));
    facets.push_back(numbered({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1}));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cp2_9() {
  return read_facet_file(data_dir() / "cp2_9.facets");
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  std::string north = "N";
  std::string south = "S";
  while (k.labels().find(north) || k.labels().find(south)) {
    north += "'";
    south += "'";
  }
  return join(SimplicialComplex::from_facets({{north}, {south}}), k);
}

SimplicialComplex fixture(const std::string& name, const FixtureParams& params) {
  if (name == "boundary_simplex") return boundary_simplex(require_param(params.d, "d", name));
  if (name == "cross_polytope") return cross_polytope(require_param(params.d, "d", name));
  if (name == "cyclic")
    return cyclic_polytope_boundary(require_param(params.n, "n", name),
                                    require_param(params.d, "d", name));
  if (name == "rp2_6") return rp2_6();
  if (name == "torus_7") return torus_7();
  if (name == "cp2_9") return cp2_9();
  if (name == "suspended_rp2") return suspension(rp2_6());
  throw Error(ErrorKind::unknown_fixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"boundary_simplex", "cross_polytope", "cyclic", "rp2_6", "torus_7", "cp2_9",
          "suspended_rp2"};
}

}  // namespace trikit
