#include <catch_amalgamated.hpp>

#include <random>

#include "trikit/errors.hpp"
#include "trikit/fixtures.hpp"
#include "trikit/homology.hpp"
#include "trikit/presentation.hpp"

using namespace trikit;

namespace {

std::vector<SimplicialComplex> connected_fixtures() {
  return {boundary_simplex(2), boundary_simplex(3), cross_polytope(2), cross_polytope(3),
          rp2_6(), torus_7(), cp2_9(), cyclic_polytope_boundary(8, 4), suspension(rp2_6()),
          SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}})};
}

GroupPresentation random_presentation(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gens(1, 4), rels(0, 4), len(1, 6);
  GroupPresentation p;
  p.generators = static_cast<std::size_t>(gens(rng));
  std::uniform_int_distribution<std::size_t> g(0, p.generators - 1);
  std::bernoulli_distribution inv(0.4);
  const int r = rels(rng);
  for (int i = 0; i < r; ++i) {
    Word w;
    const int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(letter(g(rng), inv(rng)));
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(w);
  }
  return p;
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(cyclic_reduce({1, -1}).empty());
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
}

TEST_CASE("edge-path presentations of small complexes") {
  const auto square = SimplicialComplex::from_facets({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  const auto p = edge_path_presentation(square);
  CHECK(p.generators == 1);
  CHECK(p.relators.empty());
  CHECK(p.tree_edges.size() == 3);
  CHECK(p.valid());

  const auto tet = edge_path_presentation(boundary_simplex(2));
  CHECK(tet.generators == 3);
  CHECK(tet.relators.size() == 4);
  CHECK(tietze_simplify(tet).generators == 0);
  CHECK(tietze_simplify(tet).relators.empty());

  const auto point = edge_path_presentation(SimplicialComplex::from_facets({{"x"}}));
  CHECK(point.generators == 0);
}

TEST_CASE("edge-path presentations are deterministic") {
  const auto k = torus_7();
  const auto a = edge_path_presentation(k);
  const auto b = edge_path_presentation(k);
  CHECK(a.relators == b.relators);
  CHECK(a.tree_edges == b.tree_edges);
  CHECK(a.tree_edges.front().first == 0);
}

TEST_CASE("disconnected input") {
  const auto k = SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}});
  try {
    edge_path_presentation(k);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::connectivity);
  }
}

TEST_CASE("projective plane simplifies to a single torsion relator") {
  const auto s = tietze_simplify(edge_path_presentation(rp2_6()));
  CHECK(s.generators == 1);
  REQUIRE(s.relators.size() == 1);
  CHECK(s.relators[0] == Word{1, 1});
  CHECK(s.to_string() == "⟨x1 | x1^2⟩");
}

TEST_CASE("abelianization of the edge-path group is H_1") {
  for (const auto& k : connected_fixtures()) {
    const auto h1 = homology(k).at(1);
    CHECK(abelianization(edge_path_presentation(k)) == h1);
    std::mt19937_64 rng(5);
    for (int s = 0; s < 5; ++s) {
      PresentationOptions opts;
      opts.tree_seed = rng();
      const auto p = edge_path_presentation(k, opts);
      CHECK(p.valid());
      CHECK(p.tree_edges.size() + 1 == k.num_vertices());
      CHECK(abelianization(p) == h1);
    }
  }
}

TEST_CASE("Tietze moves") {
  const auto p = parse_presentation({"a", "b"}, {"a"});
  const auto s = tietze_simplify(p);
  CHECK(s.generators == 1);
  CHECK(s.relators.empty());

  const auto q = parse_presentation({"a", "b", "c"}, {"a b^-1", "b c", "c^3"});
  const auto t = tietze_simplify(q);
  CHECK(t.generators == 1);
  CHECK(abelianization(t) == Group{0, {BigInt(3)}});

  const auto dup = tietze_simplify(parse_presentation({"a", "b"}, {"a b a^-1 b^-1", "b a b^-1 a^-1"}));
  CHECK(dup.relators.size() == 1);

  CHECK(tietze_simplify(edge_path_presentation(rp2_6()), 0).generators == 10);
}

TEST_CASE("Tietze simplification preserves abelianization and tracks generators") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_presentation(rng);
    REQUIRE(p.valid());
    const auto t = tietze_simplify_tracked(p);
    CHECK(t.presentation.valid());
    CHECK(abelianization(t.presentation) == abelianization(p));
    CHECK(t.input_generator_images.size() == p.generators);
  }
}

TEST_CASE("presentation parsing") {
  const auto p = parse_presentation({"a", "b"}, {"a^2", "b^3", "(a b)^5", "a a^-1"});
  CHECK(p.generators == 2);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == Word{1, 1});
  CHECK(p.relators[2].size() == 10);
  CHECK_THROWS_AS(parse_presentation({"a"}, {"c"}), Error);
  CHECK_THROWS_AS(parse_presentation({"a"}, {"(a"}), Error);
  CHECK_THROWS_AS(parse_presentation({"a", "a"}, {}), Error);
}

TEST_CASE("invalid presentations are detected") {
  GroupPresentation p;
  p.generators = 1;
  p.relators = {{2}};
  CHECK_FALSE(p.valid());
  p.relators = {{1, -1}};
  CHECK_FALSE(p.valid());
}
