#pragma once

#include <string>
#include <vector>

#include "trikit/combinatoriality.hpp"
#include "trikit/complex.hpp"
#include "trikit/homology.hpp"

namespace trikit {

// Group comparisons are by invariants (Betti number and torsion list); no
// maps between the groups are constructed.
struct GroupComparison {
  std::string kind;  // "homology" or "cohomology"
  int left_dim = 0;
  int right_dim = 0;
  Coefficients ring = Coefficients::integers();
  Group left;
  Group right;
  bool equal = false;
  /// A mismatch that is expected and tolerated (the cohomology side of the
  /// complement check at i = d-1 on non-orientable input).
  bool flagged = false;
};

struct CheckReport {
  std::string check;
  std::vector<GroupComparison> comparisons;
  std::vector<std::string> notes;

  bool passed() const;
};

/// For a closed d-pseudomanifold K and a vertex set V spanning a facet,
/// compares H_i and H^i of K(K⁰ − V) with those of K for i < d. Integer
/// coefficients throughout, except that homology at i = d-1 on non-orientable
/// K is compared over ℤ₂. Throws hypothesis when V does not span a facet.
CheckReport complement_homology_check(const SimplicialComplex& k, const VertexSet& v);

/// H̃_i(S(V)) against H̃^{n-i-1}(S(V')) for i = -1..n, where V' = S⁰ − V.
CheckReport alexander_duality_check(const CertifiedSphere& sphere, const VertexSet& v);
/// Certifies first; throws unsupported_input when S cannot be certified.
CheckReport alexander_duality_check(const SimplicialComplex& s, const VertexSet& v);

struct LocalHomologyReport {
  Simplex simplex;
  int link_dim = 0;  // k, where σ has codimension k+1
  std::size_t link_vertices = 0;
  HomologyProfile link_homology;
  bool homology_sphere = false;
};

/// Reduced integral homology of lk(σ) and whether it is that of S^k.
LocalHomologyReport local_homology_check(const SimplicialComplex& k, const Simplex& sigma);

struct LocalHomologySweep {
  std::vector<LocalHomologyReport> reports;  // by dimension of σ, then lexicographic
  bool all_spheres() const;
};

/// Every nonempty simplex of K.
LocalHomologySweep local_homology_sweep(const SimplicialComplex& k, unsigned threads = 1);

}  // namespace trikit
