#include <catch_amalgamated.hpp>

#include <random>

#include "trikit/errors.hpp"
#include "trikit/fixtures.hpp"
#include "trikit/verify.hpp"

using namespace trikit;

namespace {

VertexSet random_subset(const SimplicialComplex& k, std::mt19937_64& rng) {
  VertexSet v;
  std::bernoulli_distribution coin(0.5);
  for (VertexId x : k.vertices())
    if (coin(rng)) v.push_back(x);
  return v;
}

VertexSet as_set(const Simplex& s) { return VertexSet(s.begin(), s.end()); }

}  // namespace

TEST_CASE("complement homology matches on spheres for every facet") {
  std::vector<SimplicialComplex> ks;
  for (int d = 1; d <= 5; ++d) ks.push_back(boundary_simplex(d));
  for (int n : {7, 8, 9}) ks.push_back(cyclic_polytope_boundary(n, 4));
  ks.push_back(cross_polytope(3));
  for (const auto& k : ks) {
    for (const auto& f : k.facets()) {
      const CheckReport r = complement_homology_check(k, as_set(f));
      CHECK(r.passed());
      for (const auto& c : r.comparisons) CHECK(c.equal);
    }
  }
}

TEST_CASE("complement homology on orientable surfaces and CP2") {
  for (const auto& k : {torus_7(), cp2_9()})
    for (const auto& f : k.facets()) CHECK(complement_homology_check(k, as_set(f)).passed());
}

TEST_CASE("projective plane exercises the Z_2 branch") {
  const auto k = rp2_6();
  for (const auto& f : k.facets()) {
    const CheckReport r = complement_homology_check(k, as_set(f));
    CHECK(r.passed());
    bool saw_z2 = false;
    for (const auto& c : r.comparisons) {
      if (c.kind == "homology" && c.left_dim == 1) {
        CHECK(c.ring == Coefficients::mod(2));
        CHECK(c.left == Group{1, {}});
        CHECK(c.equal);
        saw_z2 = true;
      }
      if (c.kind == "cohomology" && c.left_dim == 1) CHECK(c.flagged);
    }
    CHECK(saw_z2);
  }
}

TEST_CASE("complement check requires a facet") {
  const auto k = rp2_6();
  CHECK_THROWS_AS(complement_homology_check(k, k.vertex_set_of({"1", "2"})), Error);
  CHECK_THROWS_AS(complement_homology_check(k, k.vertex_set_of({"1", "2", "3"})), Error);
}

TEST_CASE("Alexander duality on random partitions of certified spheres") {
  std::mt19937_64 rng(17);
  for (const auto& s : {cross_polytope(2), cross_polytope(4), cyclic_polytope_boundary(8, 4),
                        boundary_simplex(3)}) {
    auto sphere = certify_sphere(s);
    REQUIRE(sphere);
    for (int trial = 0; trial < 30; ++trial) {
      const CheckReport r = alexander_duality_check(*sphere, random_subset(s, rng));
      CHECK(r.passed());
      CHECK(r.comparisons.size() == static_cast<std::size_t>(s.dim() + 2));
    }
    CHECK(alexander_duality_check(*sphere, {}).passed());
    CHECK(alexander_duality_check(*sphere, s.vertices()).passed());
  }
}

TEST_CASE("duality refuses complexes that cannot be certified") {
  try {
    alexander_duality_check(torus_7(), {0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported_input);
  }
}

TEST_CASE("local homology on manifolds and on a suspension") {
  for (const auto& k : {cross_polytope(3), cp2_9(), torus_7(), rp2_6()})
    CHECK(local_homology_sweep(k, 2).all_spheres());

  const auto s = suspension(rp2_6());
  const auto sweep = local_homology_sweep(s, 2);
  CHECK_FALSE(sweep.all_spheres());
  const auto apex = local_homology_check(s, s.simplex_of({"N"}));
  CHECK_FALSE(apex.homology_sphere);
  CHECK(apex.link_dim == 2);
  CHECK(local_homology_check(s, s.simplex_of({"N", "1"})).homology_sphere);
}

TEST_CASE("broken complexes are rejected at the precondition") {
  // A tetrahedron boundary with an extra triangle hanging off an edge: the
  // edge lies in three triangles.
  const auto k = SimplicialComplex::from_facets(
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}, {"1", "2", "5"}});
  try {
    local_homology_sweep(k);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_pseudomanifold);
  }
  CHECK_THROWS_AS(local_homology_check(k, k.simplex_of({"1"})), Error);
  CHECK_THROWS_AS(local_homology_check(torus_7(), Simplex{}), Error);
}
