#include <catch_amalgamated.hpp>

#include <random>

#include "trikit/fixtures.hpp"
#include "trikit/freeness.hpp"
#include "trikit/presentation.hpp"

using namespace trikit;

namespace {

GroupPresentation icosahedral() { return parse_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5"}); }

}  // namespace

TEST_CASE("free groups") {
  const auto square = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  const auto v = freeness_verdict(edge_path_presentation(square));
  CHECK(v.kind == FreenessKind::free);
  CHECK(v.free_rank == 1);
  CHECK(v.to_string() == "FREE(1)");

  const auto s = freeness_verdict(edge_path_presentation(cross_polytope(3)));
  CHECK(s.kind == FreenessKind::free);
  CHECK(s.free_rank == 0);
  CHECK(validate_certificate(s));
}

TEST_CASE("torsion certifies non-freeness") {
  const auto v = freeness_verdict(edge_path_presentation(rp2_6()));
  CHECK(v.kind == FreenessKind::not_free);
  CHECK(v.reason == NonFreeReason::torsion_in_h1);
  CHECK(v.torsion == std::vector<BigInt>{2});
  CHECK(validate_certificate(v));

  FreenessVerdict forged = v;
  forged.torsion = {3};
  CHECK_FALSE(validate_certificate(forged));
}

TEST_CASE("icosahedral presentation maps onto a subgroup of S_5") {
  const auto v = freeness_verdict(icosahedral());
  REQUIRE(v.kind == FreenessKind::not_free);
  CHECK(v.reason == NonFreeReason::perfect_nontrivial_quotient);
  REQUIRE(v.quotient);
  CHECK(v.quotient->degree == 5);
  CHECK(validate_certificate(v));
  for (const Word& r : v.presentation.relators) {
    const Permutation image = evaluate(r, v.quotient->images, v.quotient->degree);
    for (std::size_t i = 0; i < image.size(); ++i) CHECK(image[i] == i);
  }

  FreenessVerdict forged = v;
  forged.quotient->images[1] = forged.quotient->images[0];
  CHECK_FALSE(validate_certificate(forged));
}

TEST_CASE("quotient search respects degree and budget limits") {
  FreenessOptions small;
  small.max_degree = 4;
  CHECK(freeness_verdict(icosahedral(), small).kind == FreenessKind::unknown);
  FreenessOptions tiny;
  tiny.search_budget = 10;
  CHECK(freeness_verdict(icosahedral(), tiny).kind == FreenessKind::unknown);
  FreenessOptions threaded;
  threaded.threads = 4;
  const auto v = freeness_verdict(icosahedral(), threaded);
  CHECK(v.kind == FreenessKind::not_free);
  CHECK(validate_certificate(v));
}

TEST_CASE("quotient search on other perfect-looking presentations") {
  const auto trivial = parse_presentation({"a", "b"}, {"a b a^-1 b^-2", "b a b^-1 a^-2"});
  const auto v = freeness_verdict(trivial);
  CHECK(v.kind != FreenessKind::free);
  if (v.kind == FreenessKind::not_free) CHECK(validate_certificate(v));

  const auto binary_icosahedral = parse_presentation({"s", "t"}, {"(s t)^2 s^-3", "s^3 t^-5"});
  const auto w = freeness_verdict(binary_icosahedral);
  CHECK(w.kind == FreenessKind::not_free);
  CHECK(validate_certificate(w));
}

TEST_CASE("torus group is undetermined") {
  const auto v = freeness_verdict(edge_path_presentation(torus_7()));
  CHECK(v.kind == FreenessKind::unknown);
  CHECK(validate_certificate(v));
}

TEST_CASE("verdicts are stable across spanning trees") {
  const std::vector<SimplicialComplex> ks{rp2_6(), torus_7(), cp2_9(), cross_polytope(3),
                                          cyclic_polytope_boundary(9, 4), suspension(rp2_6())};
  std::mt19937_64 rng(42);
  for (const auto& k : ks) {
    const auto reference = freeness_verdict(edge_path_presentation(k));
    for (int s = 0; s < 20; ++s) {
      PresentationOptions opts;
      opts.tree_seed = rng();
      const auto v = freeness_verdict(edge_path_presentation(k, opts));
      CHECK(v.kind == reference.kind);
      CHECK(v.free_rank == reference.free_rank);
      CHECK(validate_certificate(v));
    }
  }
}
