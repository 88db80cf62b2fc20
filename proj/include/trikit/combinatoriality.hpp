#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trikit/complex.hpp"

namespace trikit {

/// Connected 1-complex in which every vertex lies on exactly two edges.
/// Throws dimension unless dim K = 1.
bool recognize_circle(const SimplicialComplex& k);

/// Closed connected 2-pseudomanifold with circular vertex links and χ = 2.
/// Throws dimension unless dim K = 2.
bool recognize_2sphere(const SimplicialComplex& k);

/// Exact recognition of S^k for k <= 2 (S^{-1} is the empty complex, S⁰ two
/// points). Returns false for complexes of another dimension.
bool recognize_low_dimensional_sphere(const SimplicialComplex& k, int sphere_dim);

enum class CertificateVerdict { certified, inconclusive, rejected };

std::string_view to_string(CertificateVerdict v);

/// Aggregate over all simplices of codimension k+1 (links of dimension k).
struct CodimensionSummary {
  int link_dim = 0;
  std::size_t simplices_checked = 0;
  std::size_t max_link_vertices = 0;
  std::optional<std::size_t> allowed_vertices;  // 3k when k >= 3
  std::size_t size_violations = 0;
  std::size_t sphere_failures = 0;  // recognizer or homology failures
  bool uses_recognizer = false;     // k <= 2
};

struct CombinatorialityCertificate {
  int dim = 0;
  std::vector<CodimensionSummary> levels;  // k = 0 .. dim-1
  CertificateVerdict verdict = CertificateVerdict::certified;
  std::optional<Simplex> witness;
  std::string reason;
};

/// Small-link certificate. Links of dimension k <= 2 go through the exact
/// recognizers; links of dimension k >= 3 must have at most 3k vertices and
/// the integral homology of S^k. A homology or recognizer failure rejects
/// (it refutes manifoldness); an oversized link with no failures anywhere is
/// inconclusive. Requires a closed pseudomanifold.
CombinatorialityCertificate small_link_certificate(const SimplicialComplex& k,
                                                   unsigned threads = 1);

/// A complex proven to be a PL-sphere. Only certify_sphere() creates these.
class CertifiedSphere {
 public:
  const SimplicialComplex& complex() const noexcept { return complex_; }
  int dim() const noexcept { return complex_.dim(); }
  const std::string& method() const noexcept { return method_; }

 private:
  friend std::optional<CertifiedSphere> certify_sphere(const SimplicialComplex&, std::size_t,
                                                       std::uint64_t);
  CertifiedSphere(SimplicialComplex k, std::string method)
      : complex_(std::move(k)), method_(std::move(method)) {}

  SimplicialComplex complex_;
  std::string method_;
};

/// Tries, in order: exact recognition in dimension <= 2; a certified small-link
/// complex with sphere homology and at most 3d vertices; bistellar reduction to
/// ∂Δ^{d+1} within the move budget.
std::optional<CertifiedSphere> certify_sphere(const SimplicialComplex& k,
                                              std::size_t bistellar_budget = 2000,
                                              std::uint64_t seed = 1);

}  // namespace trikit
