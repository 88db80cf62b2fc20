#include "trikit/bistellar.hpp"

#include <map>
#include <random>
#include <set>

#include "trikit/errors.hpp"
#include "trikit/homology.hpp"
#include "trikit/pseudomanifold.hpp"

namespace trikit {

namespace {

bool is_face(const std::vector<Simplex>& facets, const Simplex& s) {
  return std::any_of(facets.begin(), facets.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

}  // namespace

std::vector<BistellarMove> available_moves(const SimplicialComplex& k) {
  const int d = k.dim();
  const auto& facets = k.facets();
  // Proper nonempty faces -> facets containing them.
  std::map<Simplex, std::vector<std::size_t>> cofacets;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    const auto& facet = facets[f];
    const std::size_t n = facet.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<VertexId> vs;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) vs.push_back(facet[j]);
      cofacets[Simplex::from_sorted(std::move(vs))].push_back(f);
    }
  }

  std::vector<BistellarMove> moves;
  for (const auto& [a, fs] : cofacets) {
    const int i = d - a.dim();
    if (static_cast<int>(fs.size()) != i + 1) continue;
    Simplex b;
    for (auto f : fs) b = b.unite(facets[f].minus(a));
    if (static_cast<int>(b.size()) != i + 1) continue;
    if (is_face(facets, b)) continue;
    moves.push_back({a, b});
  }
  std::sort(moves.begin(), moves.end(), [](const BistellarMove& x, const BistellarMove& y) {
    if (x.removed.size() != y.removed.size()) return x.removed.size() < y.removed.size();
    return x.removed < y.removed;
  });
  return moves;
}

SimplicialComplex apply_move(const SimplicialComplex& k, const BistellarMove& move) {
  const auto& facets = k.facets();
  const int d = k.dim();
  const int i = move.index();
  if (static_cast<int>(move.removed.size() + move.added.size()) != d + 2 || i < 1 ||
      !move.removed.disjoint_from(move.added) || is_face(facets, move.added))
    throw Error(ErrorKind::unsupported_input, "bistellar move does not apply");

  std::set<Simplex> out(facets.begin(), facets.end());
  for (VertexId b : move.added) {
    Simplex old = move.removed.unite(move.added.without(b));
    if (!out.erase(old)) throw Error(ErrorKind::unsupported_input, "bistellar move does not apply");
  }
  // lk(A) must be exactly ∂B.
  for (const auto& f : out)
    if (move.removed.is_face_of(f))
      throw Error(ErrorKind::unsupported_input, "link of the removed face is not ∂B");
  for (VertexId a : move.removed) out.insert(move.added.unite(move.removed.without(a)));
  return SimplicialComplex::from_simplices(k.label_table(), {out.begin(), out.end()});
}

bool is_boundary_of_simplex(const SimplicialComplex& k) {
  const auto n = static_cast<std::size_t>(k.dim() + 2);
  if (k.num_vertices() != n || k.facets().size() != n) return false;
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](const Simplex& f) { return f.dim() == k.dim(); });
}

BistellarResult bistellar_sphere_heuristic(const SimplicialComplex& k,
                                           const BistellarOptions& options) {
  require_closed_pseudomanifold(k);
  if (!has_sphere_homology(k, k.dim(), Coefficients::integers()))
    throw Error(ErrorKind::hypothesis, "bistellar search needs sphere homology");

  if (is_boundary_of_simplex(k)) return {BistellarOutcome::reduced_to_boundary_simplex, 0, {}, k};
  const int d = k.dim();
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
  const std::size_t per_run = std::max<std::size_t>(1, options.move_budget / restarts);
  std::size_t used = 0;
  std::vector<BistellarMove> last_moves;
  SimplicialComplex last = k;

  for (std::size_t run = 0; run < restarts && used < options.move_budget; ++run) {
    std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * run);
    SimplicialComplex cur = k;
    std::vector<BistellarMove> log;
    // Temperature for accepting facet-increasing moves; cools each step.
    double temperature = 0.3;

    for (std::size_t step = 0; step < per_run && used < options.move_budget; ++step) {
      if (is_boundary_of_simplex(cur))
        return {BistellarOutcome::reduced_to_boundary_simplex, used, std::move(log), cur};
      auto moves = available_moves(cur);
      if (moves.empty()) break;

      // Facet count changes by (d - i + 1) - (i + 1) = d - 2i.
      std::vector<const BistellarMove*> removing, shrinking, neutral, growing;
      for (const auto& m : moves) {
        const int i = m.index();
        if (i == d) removing.push_back(&m);
        else if (d - 2 * i < 0) shrinking.push_back(&m);
        else if (d - 2 * i == 0) neutral.push_back(&m);
        else growing.push_back(&m);
      }
      auto pick = [&](const std::vector<const BistellarMove*>& pool) {
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      };
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      const BistellarMove* chosen = nullptr;
      if (!removing.empty()) chosen = pick(removing);
      else if (!shrinking.empty() && coin(rng) > temperature / 4) chosen = pick(shrinking);
      else if (!neutral.empty() && (growing.empty() || coin(rng) > temperature)) chosen = pick(neutral);
      else if (!growing.empty()) chosen = pick(growing);
      else chosen = pick(shrinking);
      temperature *= 0.995;

      cur = apply_move(cur, *chosen);
      log.push_back(*chosen);
      ++used;
      if (options.on_move) options.on_move(cur, *chosen);
    }
    if (is_boundary_of_simplex(cur))
      return {BistellarOutcome::reduced_to_boundary_simplex, used, std::move(log), cur};
    last_moves = std::move(log);
    last = cur;
  }
  return {BistellarOutcome::budget_exhausted, used, std::move(last_moves), last};
}

}  // namespace trikit
