#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trikit/complex.hpp"

namespace trikit {

/// Replaces A * ∂B by ∂A * B, where lk(A) = ∂B and B is not a face.
/// |A| + |B| = d + 2. Moves with |A| = d+1 (vertex insertion) are never
/// generated, so flips never add vertices.
struct BistellarMove {
  Simplex removed;  // A
  Simplex added;    // B

  int index() const noexcept { return added.dim(); }  // i where dim A = d - i
  friend bool operator==(const BistellarMove&, const BistellarMove&) = default;
};

/// All applicable moves on a pure complex, ordered by (dim A, A).
std::vector<BistellarMove> available_moves(const SimplicialComplex& k);

/// Throws unsupported_input if the move does not apply.
SimplicialComplex apply_move(const SimplicialComplex& k, const BistellarMove& move);

/// Pure d-complex on d+2 vertices with d+2 facets.
bool is_boundary_of_simplex(const SimplicialComplex& k);

enum class BistellarOutcome { reduced_to_boundary_simplex, budget_exhausted };

struct BistellarOptions {
  std::size_t move_budget = 2000;  // total over all restarts
  std::size_t restarts = 4;
  std::uint64_t seed = 1;
  /// Observer invoked after every applied move.
  std::function<void(const SimplicialComplex&, const BistellarMove&)> on_move;
};

struct BistellarResult {
  BistellarOutcome outcome = BistellarOutcome::budget_exhausted;
  std::size_t moves_used = 0;
  std::vector<BistellarMove> moves;  // the successful (or last) run
  SimplicialComplex final_complex;
};

/// Greedy flip search toward ∂Δ^{d+1} with seeded random restarts. Success
/// proves K is a PL-sphere; exhaustion proves nothing. Requires a closed
/// pseudomanifold with the integral homology of a sphere.
BistellarResult bistellar_sphere_heuristic(const SimplicialComplex& k,
                                           const BistellarOptions& options = {});

}  // namespace trikit
