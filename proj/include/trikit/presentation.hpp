#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trikit/complex.hpp"
#include "trikit/homology.hpp"

namespace trikit {

/// A letter is ±(g+1) for generator g; negative means inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline std::size_t generator_of(Letter l) { return static_cast<std::size_t>((l < 0 ? -l : l) - 1); }
inline Letter letter(std::size_t g, bool inverse = false) {
  auto l = static_cast<Letter>(g + 1);
  return inverse ? -l : l;
}

Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  /// Edge-path provenance: spanning-tree edges (by vertex id) and the edge
  /// behind each generator. Empty for hand-built presentations.
  std::vector<std::pair<VertexId, VertexId>> tree_edges;
  std::vector<std::pair<VertexId, VertexId>> generator_edges;

  /// Letters in range and every relator freely reduced.
  bool valid() const;
  /// ⟨x1, x2 | x1^2, x1 x2 x1^-1⟩
  std::string to_string() const;
};

/// Builds a presentation from generator names and relator strings such as
/// "a^2", "b a^-1 b", "(a b)^5". Tokens are separated by spaces; a name or a
/// parenthesized group may carry an integer exponent. Throws parse.
GroupPresentation parse_presentation(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& relators);

struct PresentationOptions {
  /// When set, the spanning tree is grown by BFS from a random root with
  /// shuffled neighbour order (still a valid presentation of π₁).
  std::optional<std::uint64_t> tree_seed;
};

/// Edge-path group of the 2-skeleton: BFS spanning tree from the smallest
/// vertex id with neighbours in increasing order; one generator per non-tree
/// edge (lexicographic); one relator per triangle. Throws connectivity for a
/// disconnected or empty complex.
GroupPresentation edge_path_presentation(const SimplicialComplex& k,
                                         const PresentationOptions& options = {});

struct TrackedPresentation {
  GroupPresentation presentation;
  /// For each generator of the input, an equal word in the output generators.
  std::vector<Word> input_generator_images;
  std::size_t moves = 0;
};

/// Length-non-increasing Tietze moves until fixpoint or budget: free/cyclic
/// reduction, removal of trivial and duplicate relators, deletion of
/// generators killed by a single-letter relator, and elimination of a
/// generator occurring exactly once in some relator when the substitution
/// does not lengthen the presentation.
TrackedPresentation tietze_simplify_tracked(const GroupPresentation& p,
                                            std::size_t effort_budget = 10000);
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t effort_budget = 10000);

/// Free rank and torsion of P^ab from the SNF of the relator exponent matrix.
Group abelianization(const GroupPresentation& p);

}  // namespace trikit
