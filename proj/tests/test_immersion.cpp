#include "doctest.h"
#include "improper/generators.hpp"
#include "improper/immersion.hpp"
#include "improper/oracles.hpp"
#include "support.hpp"

using namespace improper;

namespace {

CutTree tree_of(const Graph& t, int k) {
  CutTree ct;
  ct.k = k;
  ct.tree_edges = t.edges();
  return ct;
}

}  // namespace

TEST_CASE("tree_cut_2colour examples") {
  SUBCASE("star") {
    Graph g = star_graph(5);
    auto c = tree_cut_2colour(g, tree_of(g, 1));
    for (Vertex v = 1; v <= 5; ++v) CHECK(c.colour[v] != c.colour[0]);
    CHECK(c.defect == 0);
  }
  SUBCASE("P4") {
    Graph g = path_graph(4);
    CHECK(tree_cut_2colour(g, tree_of(g, 1)).defect <= 1);
  }
  SUBCASE("C6 along a spanning path") {
    Graph g = cycle_graph(6);
    auto c = tree_cut_2colour(g, tree_of(path_graph(6), 2));
    CHECK(c.num_colours <= 2);
    CHECK(c.defect <= 2);
  }
}

TEST_CASE("check_cut_tree") {
  Graph g = cycle_graph(6);
  auto ok = check_cut_tree(g, tree_of(path_graph(6), 2));
  CHECK(ok.ok);
  CHECK(ok.worst_cut == 2);
  auto bad = check_cut_tree(g, tree_of(path_graph(6), 1));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.offending);
  CHECK_THROWS_AS(tree_cut_2colour(g, tree_of(path_graph(6), 1)), PreconditionError);

  CutTree not_spanning;
  not_spanning.k = 3;
  not_spanning.tree_edges = {{0, 1}, {1, 2}};
  CHECK_FALSE(check_cut_tree(g, not_spanning).ok);
}

TEST_CASE("tree_cut_2colour on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto [g, ct] = testing::cut_tree_instance(20 + static_cast<int>(seed * 3 % 180), k, seed);
    REQUIRE(check_cut_tree(g, ct).ok);
    auto c = tree_cut_2colour(g, ct);
    auto m = oracle::validate_colouring(g, c.colour);
    CHECK(m.num_colours <= 2);
    CHECK(m.defect <= k);
  }
}

TEST_CASE("tpartition_2colour examples") {
  SUBCASE("one bag holding K4") {
    TPartition tp{1, {}, {{0, 1, 2, 3}}};
    auto stats = tpartition_stats(complete_graph(4), tp);
    CHECK(stats.max_bag == 4);
    CHECK(stats.adhesion == 0);
    CHECK(tpartition_2colour(complete_graph(4), tp).defect <= 3);
  }
  SUBCASE("two triangles joined by two edges") {
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}});
    TPartition tp{2, {{0, 1}}, {{0, 1, 2}, {3, 4, 5}}};
    auto stats = tpartition_stats(g, tp);
    CHECK(stats.adhesion == 2);
    CHECK(stats.max_bag == 3);
    CHECK(stats.defect_bound(1) == 6);
    auto c = tpartition_2colour(g, tp);
    CHECK(c.num_colours <= 2);
    CHECK(c.defect <= 2);
  }
  SUBCASE("path of singleton bags") {
    TPartition tp{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0}, {1}, {2}, {3}, {4}}};
    CHECK(tpartition_2colour(path_graph(5), tp).defect <= 1);
  }
  SUBCASE("bags must partition the vertices") {
    TPartition tp{2, {{0, 1}}, {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(tpartition_2colour(path_graph(3), tp), PreconditionError);
  }
}

TEST_CASE("tpartition_2colour on random instances") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Graph g = testing::thinned(testing::triangulation(30, seed), seed);
    auto tp = testing::random_tpartition(g, 2 + static_cast<int>(seed % 12), seed);
    tp.multiplicity = 1 + static_cast<int>(seed % 2);
    auto stats = tpartition_stats(g, tp);
    auto c = tpartition_2colour(g, tp);
    auto m = oracle::validate_colouring(g, c.colour);
    CHECK(m.num_colours <= 2);
    CHECK(m.defect <= stats.defect_bound(tp.multiplicity));
  }
}
