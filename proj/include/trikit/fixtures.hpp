#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trikit/complex.hpp"

namespace trikit {

struct FixtureParams {
  std::optional<int> d;  // sphere dimension, or polytope dimension for "cyclic"
  std::optional<int> n;  // vertex count for "cyclic"
};

// Built-in fixtures (labels are 1-based integers):
//   boundary_simplex d     ∂Δ^{d+1}, d+2 vertices
//   cross_polytope d       boundary of the (d+1)-cross-polytope, a d-sphere;
//                          vertices 2j+1 and 2j+2 are antipodal
//   cyclic n d             boundary of the cyclic polytope C(n,d), a (d-1)-sphere
//   rp2_6                  6-vertex real projective plane
//   torus_7                7-vertex (Möbius) torus
//   cp2_9                  Kühnel's 9-vertex CP², read from data/cp2_9.facets
//   suspended_rp2          S⁰ * rp2_6; a pseudomanifold whose apex links are RP²
SimplicialComplex fixture(const std::string& name, const FixtureParams& params = {});
std::vector<std::string> fixture_names();

SimplicialComplex boundary_simplex(int d);
SimplicialComplex cross_polytope(int d);
SimplicialComplex cyclic_polytope_boundary(int n, int d);
SimplicialComplex rp2_6();
SimplicialComplex torus_7();
SimplicialComplex cp2_9();

/// S⁰ * K with fresh apex labels.
SimplicialComplex suspension(const SimplicialComplex& k);

}  // namespace trikit
