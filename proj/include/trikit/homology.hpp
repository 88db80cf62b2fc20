#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/complex.hpp"
#include "trikit/smith.hpp"

namespace trikit {

/// ℤ (prime == 0) or ℤ/p for a prime p.
class Coefficients {
 public:
  static Coefficients integers() { return Coefficients(0); }
  /// Throws invalid_coefficient unless p is prime.
  static Coefficients mod(std::uint32_t p);
  /// Accepts "z", "Z", "z2", "Z_3", "zp5"-style names.
  static Coefficients parse(std::string_view name);

  bool is_integral() const noexcept { return prime_ == 0; }
  std::uint32_t prime() const noexcept { return prime_; }
  std::string name() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_;
};

enum class Chains { reduced, unreduced };

/// A finitely generated abelian group ℤ^betti ⊕ ⊕ ℤ/t, t in torsion (sorted
/// by divisibility). Over a field the torsion list is always empty.
struct Group {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const noexcept { return betti == 0 && torsion.empty(); }
  /// ≅ the coefficient ring itself.
  bool is_ring() const noexcept { return betti == 1 && torsion.empty(); }
  std::string to_string(const Coefficients& ring) const;

  friend bool operator==(const Group&, const Group&) = default;
};

struct HomologyProfile {
  Coefficients ring = Coefficients::integers();
  bool reduced = true;
  bool cohomology = false;
  int first_dim = -1;          // -1 for reduced profiles, 0 otherwise
  std::vector<Group> groups;   // groups[j] sits in dimension first_dim + j

  /// The group in dimension i; zero outside the stored range.
  const Group& at(int i) const;
  int last_dim() const noexcept { return first_dim + static_cast<int>(groups.size()) - 1; }

  /// Compares groups dimension by dimension (ring, flags, and every group).
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

/// ∂_i : C_i → C_{i-1}, rows indexed by faces(i-1), columns by faces(i),
/// entry (-1)^j for deleting the j-th vertex. With reduced chains ∂_0 maps
/// onto the empty simplex.
struct BoundaryMatrix {
  int dim = 0;
  SparseColumns matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int i, Chains chains = Chains::reduced);

HomologyProfile homology(const SimplicialComplex& k,
                         Coefficients coeff = Coefficients::integers(),
                         Chains chains = Chains::reduced);

/// Computed from the transposed boundary matrices. Over ℤ the result is
/// checked against homology() by the universal coefficient relation and a
/// std::logic_error is raised if they disagree.
HomologyProfile cohomology(const SimplicialComplex& k,
                           Coefficients coeff = Coefficients::integers(),
                           Chains chains = Chains::reduced);

/// Free part of H^i equals free part of H_i and torsion of H^i equals
/// torsion of H_{i-1}.
bool satisfies_universal_coefficients(const HomologyProfile& homology,
                                      const HomologyProfile& cohomology);

/// Reduced homology of S^k: ring in dimension k, zero elsewhere (k >= -1).
bool has_sphere_homology(const HomologyProfile& reduced_profile, int k);
bool has_sphere_homology(const SimplicialComplex& k, int sphere_dim,
                         Coefficients coeff = Coefficients::integers());

/// Requires a closed pseudomanifold of dimension d.
bool is_homology_sphere(const SimplicialComplex& k, int d,
                        Coefficients coeff = Coefficients::integers());

long long euler_characteristic(const SimplicialComplex& k);
long long euler_characteristic(const HomologyProfile& rational_profile);

}  // namespace trikit
