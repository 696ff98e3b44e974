#include <algorithm>

#include "doctest.h"
#include "improper/generators.hpp"
#include "improper/lexbfs.hpp"
#include "improper/oracles.hpp"
#include "support.hpp"

using namespace improper;

TEST_CASE("lexbfs_tree on small graphs") {
  SUBCASE("P3") {
    auto t = lexbfs_tree(path_graph(3), 0);
    CHECK(t.layers == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
    CHECK(t.parent[1] == 0);
    CHECK(t.parent[2] == 1);
  }
  SUBCASE("C4 breaks ties by id") {
    auto t = lexbfs_tree(cycle_graph(4), 0);
    CHECK(t.layers == std::vector<std::vector<Vertex>>{{0}, {1, 3}, {2}});
    CHECK(t.parent[2] == 1);
  }
  SUBCASE("Petersen passes the rule checker") { CHECK(check_lex_rules(petersen_graph(), lexbfs_tree(petersen_graph(), 0))); }
  SUBCASE("disconnected input and bad root are rejected") {
    CHECK_THROWS_AS(lexbfs_tree(Graph(2, {}), 0), PreconditionError);
    CHECK_THROWS_AS(lexbfs_tree(path_graph(2), 5), PreconditionError);
  }
}

TEST_CASE("check_lex_rules rejects broken trees") {
  SUBCASE("BFS violation") {
    auto t = lexbfs_tree(path_graph(3), 0);
    t.layer_index[2] = 0;
    t.layers = {{0, 2}, {1}};
    t.position[2] = 1;
    CHECK_FALSE(check_lex_rules(path_graph(3), t));
  }
  SUBCASE("priority violation") {
    auto t = lexbfs_tree(cycle_graph(4), 0);
    t.layers[1] = {3, 1};
    t.position[3] = 0;
    t.position[1] = 1;
    t.parent[2] = 1;
    CHECK_FALSE(check_lex_rules(cycle_graph(4), t));
  }
}

TEST_CASE("lexbfs_tree satisfies the rules on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = testing::connected(30, static_cast<int>(seed % 40), seed);
    Rng rng(seed);
    Vertex root = rng.below(30);
    auto t = lexbfs_tree(g, root);
    CHECK(check_lex_rules(g, t));
    auto dist = bfs_distances(g, root);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(t.layer_index[v] == dist[v]);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = testing::triangulation(40, seed);
    CHECK(check_lex_rules(g, lexbfs_tree(g, 0)));
  }
}

TEST_CASE("lexbfs_tree restricted to a vertex set") {
  Graph g = grid_graph(3, 3);
  VertexMask within = mask_of(9, std::vector<Vertex>{0, 1, 2, 5, 8});
  auto t = lexbfs_tree(g, 0, &within);
  CHECK(t.vertices() == VertexSet{0, 1, 2, 5, 8});
  CHECK_FALSE(t.contains(4));
  CHECK(check_lex_rules(g, t, &within));
  CHECK(t.depth() == 4);
}

TEST_CASE("subtree_to") {
  SUBCASE("P3 to the far end") {
    auto s = subtree_to(lexbfs_tree(path_graph(3), 0), std::vector<Vertex>{2});
    CHECK(s.vertices == VertexSet{0, 1, 2});
    CHECK(s.leaves == VertexSet{2});
  }
  SUBCASE("star to two leaves") {
    auto s = subtree_to(lexbfs_tree(star_graph(3), 0), std::vector<Vertex>{1, 2});
    CHECK(s.vertices.size() == 3);
    CHECK(s.leaves.size() == 2);
  }
  SUBCASE("grid corners") {
    auto s = subtree_to(lexbfs_tree(grid_graph(3, 3), 0), std::vector<Vertex>{2, 6});
    CHECK(s.leaves.size() <= 2);
    for (Vertex leaf : s.leaves) CHECK((leaf == 2 || leaf == 6));
  }
  SUBCASE("leaves always lie in the target set") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Graph g = testing::connected(25, 15, seed);
      Rng rng(seed * 7);
      auto a = testing::sample(25, 1 + rng.below(5), rng);
      auto s = subtree_to(lexbfs_tree(g, 0), a);
      for (Vertex leaf : s.leaves) CHECK(std::binary_search(a.begin(), a.end(), leaf));
      for (Vertex v : a) CHECK(s.contains(v));
    }
  }
}

TEST_CASE("neighbour_count_in") {
  SUBCASE("K4 path 0-1") {
    auto s = subtree_to(lexbfs_tree(complete_graph(4), 0), std::vector<Vertex>{1});
    CHECK(neighbour_count_in(complete_graph(4), s, 2) == 2);
  }
  SUBCASE("P5 whole path") {
    auto s = subtree_to(lexbfs_tree(path_graph(5), 0), std::vector<Vertex>{4});
    CHECK(neighbour_count_in(path_graph(5), s, 2) == 2);
  }
  SUBCASE("at most twice the leaf count") {
    auto check = [](const Graph& g, const VertexSet& a) {
      auto s = subtree_to(lexbfs_tree(g, a.front()), a);
      const int leaves = std::max<int>(1, static_cast<int>(s.leaves.size()));
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(neighbour_count_in(g, s, v) == testing::neighbours_in(g, v, s.vertices));
        CHECK(neighbour_count_in(g, s, v) <= 2 * leaves);
      }
    };
    check(petersen_graph(), {0, 5, 7});
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Graph g = testing::connected(40, 40, seed);
      Rng rng(seed);
      check(g, testing::sample(40, 2 + rng.below(5), rng));
    }
  }
}

TEST_CASE("bandwidth_ordering") {
  SUBCASE("P4 from an end") {
    auto ord = bandwidth_ordering(path_graph(4), lexbfs_tree(path_graph(4), 0));
    CHECK(ord.sequence == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(oracle::bandwidth_of_ordering(path_graph(4), ord) == 1);
  }
  SUBCASE("star from the centre") {
    auto ord = bandwidth_ordering(star_graph(4), lexbfs_tree(star_graph(4), 0));
    CHECK(oracle::bandwidth_of_ordering(star_graph(4), ord) <= 4);
  }
  SUBCASE("bounded by the leaf count") {
    auto check = [](const Graph& g) {
      auto t = lexbfs_tree(g, 0);
      auto ord = bandwidth_ordering(g, t);
      CHECK(oracle::bandwidth_of_ordering(g, ord) <= std::max<int>(1, static_cast<int>(t.leaves().size())));
    };
    check(cycle_graph(6));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) check(testing::connected(30, 20, seed));
  }
}

TEST_CASE("layering covers and respects edges") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = testing::triangulation(30, seed);
    auto t = lexbfs_tree(g, 0);
    auto layers = layering(t);
    std::vector<int> at(g.order(), -1);
    for (std::size_t i = 0; i < layers.size(); ++i) {
      for (Vertex v : layers[i]) at[v] = static_cast<int>(i);
    }
    for (Vertex v = 0; v < g.order(); ++v) CHECK(at[v] >= 0);
    for (auto [u, v] : g.edges()) CHECK(std::abs(at[u] - at[v]) <= 1);
  }
}
