#include "trikit/pseudomanifold.hpp"

#include <map>
#include <queue>

#include "trikit/errors.hpp"

namespace trikit {

namespace {

struct RidgeUse {
  std::size_t facet;
  std::size_t position;  // index of the deleted vertex
};

std::map<Simplex, std::vector<RidgeUse>> ridge_incidence(const SimplicialComplex& k) {
  std::map<Simplex, std::vector<RidgeUse>> ridges;
  const auto& fs = k.facets();
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (std::size_t j = 0; j < fs[f].size(); ++j)
      ridges[fs[f].without_index(j)].push_back({f, j});
  return ridges;
}

}  // namespace

PseudomanifoldReport closed_pseudomanifold_report(const SimplicialComplex& k) {
  if (k.dim() < 1)
    throw Error(ErrorKind::dimension, "pseudomanifold checks need dimension >= 1");
  PseudomanifoldReport report;
  const auto& fs = k.facets();
  report.pure = std::all_of(fs.begin(), fs.end(), [&](const Simplex& f) { return f.dim() == k.dim(); });

  auto ridges = ridge_incidence(k);
  report.ridge_degree_two = true;
  for (const auto& r : k.faces(k.dim() - 1)) {
    std::size_t degree = 0;
    if (auto it = ridges.find(r); it != ridges.end())
      for (const auto& use : it->second)
        if (fs[use.facet].dim() == k.dim()) ++degree;
    if (degree != 2) {
      report.ridge_degree_two = false;
      report.bad_ridge = r;
      break;
    }
  }

  std::vector<std::vector<std::size_t>> adj(fs.size());
  for (const auto& [r, uses] : ridges)
    for (std::size_t a = 0; a < uses.size(); ++a)
      for (std::size_t b = a + 1; b < uses.size(); ++b) {
        adj[uses[a].facet].push_back(uses[b].facet);
        adj[uses[b].facet].push_back(uses[a].facet);
      }
  std::vector<bool> seen(fs.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto f = q.front();
    q.pop();
    for (auto g : adj[f])
      if (!seen[g]) {
        seen[g] = true;
        ++reached;
        q.push(g);
      }
  }
  report.strongly_connected = reached == fs.size();
  return report;
}

bool is_closed_pseudomanifold(const SimplicialComplex& k) {
  return k.dim() >= 1 && closed_pseudomanifold_report(k).ok();
}

void require_closed_pseudomanifold(const SimplicialComplex& k) {
  if (k.dim() < 1)
    throw Error(ErrorKind::not_a_pseudomanifold, "complex has dimension < 1");
  auto r = closed_pseudomanifold_report(k);
  if (!r.pure) throw Error(ErrorKind::not_a_pseudomanifold, "complex is not pure");
  if (!r.ridge_degree_two)
    throw Error(ErrorKind::not_a_pseudomanifold, "some ridge does not lie in exactly two facets");
  if (!r.strongly_connected)
    throw Error(ErrorKind::not_a_pseudomanifold, "facet adjacency graph is disconnected");
}

std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k) {
  require_closed_pseudomanifold(k);
  const auto& fs = k.facets();
  auto ridges = ridge_incidence(k);

  // Facet f with sign s induces s * (-1)^j on the ridge obtained by deleting
  // its j-th vertex; neighbours must induce opposite orientations.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(fs.size());
  for (const auto& [r, uses] : ridges) {
    const auto& a = uses[0];
    const auto& b = uses[1];
    int pa = (a.position % 2 == 0) ? 1 : -1;
    int pb = (b.position % 2 == 0) ? 1 : -1;
    // s_b * pb == -(s_a * pa)  =>  s_b == -s_a * pa * pb
    int rel = -pa * pb;
    adj[a.facet].push_back({b.facet, rel});
    adj[b.facet].push_back({a.facet, rel});
  }

  std::vector<int> sign(fs.size(), 0);
  std::queue<std::size_t> q;
  sign[0] = 1;
  q.push(0);
  while (!q.empty()) {
    auto f = q.front();
    q.pop();
    for (auto [g, rel] : adj[f]) {
      int want = sign[f] * rel;
      if (sign[g] == 0) {
        sign[g] = want;
        q.push(g);
      } else if (sign[g] != want) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

Orientability orientability(const SimplicialComplex& k) {
  return coherent_orientation(k) ? Orientability::orientable : Orientability::non_orientable;
}

}  // namespace trikit
