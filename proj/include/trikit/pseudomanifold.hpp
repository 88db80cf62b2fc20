#pragma once

#include <optional>

#include "trikit/complex.hpp"

namespace trikit {

struct PseudomanifoldReport {
  bool pure = false;
  bool ridge_degree_two = false;
  bool strongly_connected = false;
  std::optional<Simplex> bad_ridge;  // first ridge whose degree is not 2

  bool ok() const noexcept { return pure && ridge_degree_two && strongly_connected; }
};

/// Requires dim K >= 1 (dimension error otherwise).
PseudomanifoldReport closed_pseudomanifold_report(const SimplicialComplex& k);
bool is_closed_pseudomanifold(const SimplicialComplex& k);

/// Throws not_a_pseudomanifold with the failing condition named.
void require_closed_pseudomanifold(const SimplicialComplex& k);

enum class Orientability { orientable, non_orientable };

/// Propagates coherent facet orientations across ridges.
Orientability orientability(const SimplicialComplex& k);

/// +1/-1 per facet (in facets() order) forming a coherent orientation,
/// or nullopt when none exists.
std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& k);

}  // namespace trikit
