#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trikit/bounds.hpp"
#include "trikit/errors.hpp"
#include "trikit/fixtures.hpp"

using namespace trikit;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::parse;
}

const BoundReport* find(const Analysis& a, const std::string& tag) {
  for (const auto& r : a.reports)
    if (r.tag == tag) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("wedge covering type") {
  CHECK(wedge_covering_type(3, 1) == 4);
  CHECK(wedge_covering_type(4, 1) == 5);
  CHECK(wedge_covering_type(1, 2) == 4);
  CHECK(kind_of([] { wedge_covering_type(0, 1); }) == ErrorKind::degenerate_input);
  CHECK(kind_of([] { wedge_covering_type(2, 0); }) == ErrorKind::hypothesis);
}

TEST_CASE("wedge covering type is minimal and monotone") {
  for (int i = 1; i <= 5; ++i) {
    long long previous = 0;
    for (long long r = 1; r <= 60; ++r) {
      const long long n = wedge_covering_type(r, i);
      CHECK(oracle::pascal(n - 1, i + 1) >= r);
      CHECK(oracle::pascal(n - 2, i + 1) < r);
      CHECK(n >= previous);
      previous = n;
    }
  }
}

TEST_CASE("wedge covering type is not monotone in the sphere dimension") {
  // Twenty circles need 8 vertices, twenty 2-spheres only 7.
  CHECK(wedge_covering_type(20, 1) == 8);
  CHECK(wedge_covering_type(20, 2) == 7);
  // For a single sphere it does grow with the dimension.
  for (int i = 1; i < 10; ++i) CHECK(wedge_covering_type(1, i + 1) == wedge_covering_type(1, i) + 1);
}

TEST_CASE("homological dimension and category bounds") {
  CHECK(ct_lower_bound_from_hdim(2, true) == 4);
  CHECK(ct_lower_bound_from_hdim(2, false) == 5);
  CHECK(ct_lower_bound_from_hdim(5, false) == 8);
  CHECK_THROWS_AS(ct_lower_bound_from_hdim(0, true), Error);
  CHECK(cat_vertex_bound(3, 4) == 10);
  CHECK(cat_vertex_bound(4, 4) == 11);
  for (int d = 1; d < 10; ++d) CHECK(cat_vertex_bound(d, 1) == d + 1);
}

TEST_CASE("simply connected bounds") {
  const auto a = simply_connected_bound(4, 2, 1);
  CHECK(a.tag == "simply-connected-middle-dimension");
  CHECK(a.bound == 9);
  CHECK(a.values.at("k") == 1);
  CHECK(a.flags.empty());
  CHECK(a.values.at("sphere_threshold") == 8);

  const auto b = simply_connected_bound(6, 2, 7);
  CHECK(b.tag == "simply-connected");
  CHECK(b.bound == 14);

  const auto adams = simply_connected_bound(6, 3, 1);
  CHECK(adams.bound == 12);
  CHECK(adams.values.at("raw_bound") == 12);
  CHECK(adams.values.at("adams_adjusted_bound") == 13);
  CHECK(adams.flags.size() == 1);

  CHECK(kind_of([] { simply_connected_bound(4, 3, 1); }) == ErrorKind::hypothesis);
  CHECK(kind_of([] { simply_connected_bound(5, 3, 1); }) == ErrorKind::hypothesis);
  CHECK(kind_of([] { simply_connected_bound(4, 2, 0); }) == ErrorKind::hypothesis);
}

TEST_CASE("middle-dimension k search matches the defining inequality") {
  for (int i = 1; i <= 8; ++i) {
    for (long long rank = 1; rank <= 80; ++rank) {
      const auto r = simply_connected_bound(2 * i, i, rank);
      const long long k = r.values.at("k");
      CHECK(oracle::pascal(i + k, i + 1) >= rank);
      if (k > 1) CHECK(oracle::pascal(i + k - 1, i + 1) < rank);
      CHECK(*r.bound == 3LL * i + k + 2);
    }
  }
  for (int d : {2, 4, 8, 16}) CHECK(simply_connected_bound(d, d / 2, 1).bound == 3 * d / 2 + 3);
}

TEST_CASE("every bound respects the d+2 floor") {
  for (int d = 2; d <= 20; ++d)
    for (int i = 1; 2 * i <= d; ++i)
      for (long long rank : {1, 2, 5, 40}) CHECK(*simply_connected_bound(d, i, rank).bound >= d + 2);
  for (int d = 3; d <= 30; ++d) {
    const auto r = nonfree_pi1_bound(d);
    CHECK(*r.bound == 3 * d + 1);
    CHECK(*r.bound > 2 * d + 3);
    CHECK(r.values.at("free_pi1_baseline") == 2 * d + 3);
  }
  CHECK(nonfree_pi1_bound(3).bound == 10);
  CHECK(nonfree_pi1_bound(4).bound == 13);
  CHECK(kind_of([] { nonfree_pi1_bound(2); }) == ErrorKind::hypothesis);
  CHECK(sphere_recognition_threshold(4) == 8);
  CHECK(sphere_recognition_threshold(5) == 9);
}

TEST_CASE("homology sphere verdicts") {
  CHECK(homology_sphere_verdict(boundary_simplex(3)).verdict == "PL-sphere");
  CHECK(homology_sphere_verdict(cross_polytope(3)).verdict == "PL-sphere");
  CHECK(homology_sphere_verdict(cross_polytope(2)).verdict == "PL-sphere");
  CHECK(homology_sphere_verdict(cross_polytope(3), Coefficients::mod(2)).verdict == "PL-sphere");
  const auto big = homology_sphere_verdict(cross_polytope(6));
  CHECK(big.verdict == "PL-sphere");
  const auto many = homology_sphere_verdict(cyclic_polytope_boundary(10, 4));
  CHECK(many.verdict.starts_with("no verdict"));
  CHECK(homology_sphere_verdict(rp2_6()).verdict.starts_with("no verdict"));
  CHECK(homology_sphere_verdict(cp2_9()).verdict.starts_with("no verdict"));
  CHECK_THROWS_AS(homology_sphere_verdict(SimplicialComplex::from_facets({{"1", "2", "3"}})), Error);
}

TEST_CASE("analysis of built-in fixtures never contradicts the vertex count") {
  for (const auto& k : {boundary_simplex(2), boundary_simplex(4), boundary_simplex(5), cross_polytope(3),
                        cross_polytope(4), rp2_6(), torus_7(), cp2_9(), cyclic_polytope_boundary(9, 4)}) {
    const Analysis a = analyze(k);
    CHECK(a.contradictions.empty());
    for (const auto& r : a.reports) {
      if (r.bound && r.lower_bound) CHECK(*r.bound >= r.d + 2);
      if (r.applicable && r.lower_bound && r.bound && r.hypotheses_verified())
        CHECK(*r.bound <= static_cast<long long>(a.vertices));
    }
  }
}

TEST_CASE("cyclic 3-sphere on nine vertices triggers the contrapositive") {
  const Analysis a = analyze(cyclic_polytope_boundary(9, 4));
  const BoundReport* c = find(a, "nonfree-pi1-contrapositive");
  REQUIRE(c);
  CHECK(c->verdict == "9 < 10: pi1 must be free");
  CHECK(c->hypotheses_verified());
  REQUIRE(a.pi1);
  CHECK(a.pi1->kind == FreenessKind::free);
  CHECK(a.pi1->free_rank == 0);
}

TEST_CASE("projective plane analysis") {
  const Analysis a = analyze(rp2_6());
  CHECK(a.dim == 2);
  const BoundReport* n = find(a, "nonfree-pi1");
  REQUIRE(n);
  CHECK_FALSE(n->applicable);
  const BoundReport* h = find(a, "homological-dimension");
  REQUIRE(h);
  CHECK(h->flags.size() == 1);
  CHECK(h->flags[0].find("Z_2") != std::string::npos);
}

TEST_CASE("boundary of the 5-simplex") {
  const Analysis a = analyze(boundary_simplex(4));
  CHECK(a.vertices == 6);
  const BoundReport* s = find(a, "sphere-threshold");
  REQUIRE(s);
  CHECK(s->verdict.find("represents the 4-sphere") != std::string::npos);
  CHECK(find(a, "homology-sphere")->verdict == "PL-sphere");
}

TEST_CASE("CP2 satisfies the middle-dimension bound with equality") {
  const Analysis a = analyze(cp2_9());
  const BoundReport* r = find(a, "simply-connected-middle-dimension");
  REQUIRE(r);
  CHECK(r->bound == 9);
  CHECK(r->hypotheses_verified());
  CHECK_FALSE(r->conditional);
}

TEST_CASE("assertions") {
  CHECK(parse_assertions("# none\n\n").pi1 == Pi1Assertion::none);
  CHECK(parse_assertions("pi1=not-free\n").pi1 == Pi1Assertion::not_free);
  CHECK(parse_assertions(" simply-connected = true ").pi1 == Pi1Assertion::trivial);
  CHECK(kind_of([] { parse_assertions("colour=blue"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_assertions("pi1"); }) == ErrorKind::parse);

  Assertions nonfree;
  nonfree.pi1 = Pi1Assertion::not_free;
  const Analysis torus = analyze(torus_7(), nonfree);
  CHECK(find(torus, "nonfree-pi1")->applicable == false);

  const Analysis asserted = analyze(cyclic_polytope_boundary(9, 4), nonfree);
  const BoundReport* r = find(asserted, "nonfree-pi1");
  CHECK(r->flags.back().find("contradicts") != std::string::npos);
}

TEST_CASE("asserted hypotheses are labelled and contradictions reported") {
  Assertions sc;
  sc.pi1 = Pi1Assertion::trivial;
  // The torus group is undetermined, so the assertion is taken at its word.
  const Analysis a = analyze(torus_7(), sc);
  const BoundReport* r = find(a, "simply-connected-middle-dimension");
  REQUIRE(r);
  bool asserted = false;
  for (const auto& h : r->hypotheses)
    if (h.name == "simply connected") asserted = h.status == HypothesisStatus::asserted;
  CHECK(asserted);
  CHECK(r->bound == 7);
  CHECK(a.contradictions.empty());
}
