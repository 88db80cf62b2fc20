#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trikit/simplex.hpp"

namespace trikit {

/// Maps external vertex labels to dense ids, in first-appearance order.
/// Complexes derived from one another share a table so ids stay comparable.
class LabelTable {
 public:
  VertexId intern(const std::string& label);
  std::optional<VertexId> find(const std::string& label) const;
  const std::string& label(VertexId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
};

using FacetLabels = std::vector<std::vector<std::string>>;

/// Immutable finite simplicial complex stored as its antichain of facets.
///
/// A complex with no facets is the empty complex {∅}: it has dimension -1
/// and its only simplex is the empty simplex. Skeleta are enumerated from
/// the facets on first request and memoized; the cache is guarded so a
/// complex may be shared between threads.
class SimplicialComplex {
 public:
  /// Builds from label tuples. Throws malformed_facet on empty tuples or
  /// repeated labels, empty_complex on an empty list.
  static SimplicialComplex from_facets(const FacetLabels& facets);

  /// Builds over an existing label table; facets are reduced to the maximal
  /// antichain.
  static SimplicialComplex from_simplices(std::shared_ptr<const LabelTable> labels,
                                          std::vector<Simplex> simplices);

  /// The empty complex {∅} over a label table.
  static SimplicialComplex empty(std::shared_ptr<const LabelTable> labels);

  int dim() const noexcept { return dim_; }
  bool is_empty() const noexcept { return facets_.empty(); }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  /// The 0-skeleton K⁰, sorted.
  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }

  const LabelTable& labels() const noexcept { return *labels_; }
  const std::shared_ptr<const LabelTable>& label_table() const noexcept { return labels_; }
  const std::string& label(VertexId v) const { return labels_->label(v); }
  std::vector<std::string> labels_of(const Simplex& s) const;
  /// Resolves labels to a simplex; throws unknown_vertex.
  Simplex simplex_of(const std::vector<std::string>& labels) const;
  VertexSet vertex_set_of(const std::vector<std::string>& labels) const;

  /// All i-faces, lexicographic, each once. i = -1 yields {∅}.
  const std::vector<Simplex>& faces(int i) const;
  /// Position of s in faces(s.dim()), if present.
  std::optional<std::size_t> face_index(const Simplex& s) const;
  bool contains(const Simplex& s) const;

  /// f-vector (f_0, ..., f_dim).
  std::vector<std::size_t> f_vector() const;

  /// Facets translated back to labels, each sorted by label, list sorted.
  FacetLabels canonical_labels() const;

  /// Same simplices (compared by label when tables differ).
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct SkeletonCache;

  SimplicialComplex(std::shared_ptr<const LabelTable> labels, std::vector<Simplex> facets);

  std::shared_ptr<const LabelTable> labels_;
  std::vector<Simplex> facets_;
  VertexSet vertices_;
  int dim_ = -1;
  std::shared_ptr<SkeletonCache> cache_;
};

// Combinatorial operations. All of them return new complexes over the
// same label table as their input (join extends it when needed).

/// lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}. Throws missing_simplex.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);

/// Closed star: every coface of σ together with all its faces.
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);

/// Every simplex of K meeting V, i.e. the simplices covered by the union of
/// the open stars of V. Sorted by (dimension, lexicographic).
std::vector<Simplex> open_star_support(const SimplicialComplex& k, const VertexSet& v);

/// Facets are pairwise unions. Throws join_collision when a label is a
/// vertex of both complexes.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// K(V): all simplices of K with every vertex in V. Throws unknown_vertex.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const VertexSet& v);

/// K(V ∪ {v}) assembled as K(V) ∪ v * (lk(v) ∩ K(V)).
/// Throws redundant_vertex when v ∈ V.
SimplicialComplex incremental_full_subcomplex(const SimplicialComplex& k, const VertexSet& v,
                                              VertexId added);

/// Simplices lying in both complexes (which must share a label table).
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// The full simplex σ̄ as a complex.
SimplicialComplex simplex_closure(std::shared_ptr<const LabelTable> labels, const Simplex& sigma);

/// K⁰ − V.
VertexSet complement(const SimplicialComplex& k, const VertexSet& v);

/// Is the 1-skeleton connected (and K non-empty)?
bool is_connected(const SimplicialComplex& k);

}  // namespace trikit
