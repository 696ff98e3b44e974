#include <algorithm>
#include <variant>

#include "doctest.h"
#include "improper/bipartite_minor.hpp"
#include "improper/generators.hpp"
#include "improper/oracles.hpp"
#include "support.hpp"

using namespace improper;

namespace {

void check_tree_parts(const Graph& g, const ConnectedPartition& p, int width, int max_leaves) {
  auto report = validate_partition(g, p);
  CHECK(report.ok());
  CHECK(report.measured_width <= width);
  REQUIRE(p.info.size() == p.parts.size());
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& info = p.info[i];
    CHECK(static_cast<int>(info.leaves.size()) <= max_leaves);
    CHECK(info.tree_edges.size() + 1 == p.parts[i].size());
    for (auto [child, up] : info.tree_edges) CHECK(g.has_edge(child, up));
  }
}

/// The anchor ends have no neighbour of their own colour.
void check_anchor(const Graph& g, const std::vector<int>& colour, Edge anchor) {
  for (Vertex x : {anchor.first, anchor.second}) {
    for (Vertex y : g.neighbours(x)) CHECK(colour[y] != colour[x]);
  }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

}  // namespace

TEST_CASE("decompose_k2t") {
  SUBCASE("C6 splits into paths") {
    auto d = decompose_k2t(cycle_graph(6), 2);
    REQUIRE(d.partition);
    check_tree_parts(cycle_graph(6), *d.partition, 1, 1);
  }
  SUBCASE("K4 contains K*2,2") {
    auto d = decompose_k2t(complete_graph(4), 2);
    REQUIRE(d.certificate);
    CHECK(d.certificate->pattern == Pattern::complete_join(2, 2));
    CHECK(oracle::validate_minor_model(complete_graph(4), *d.certificate).ok);
  }
  SUBCASE("fan on 6 vertices") {
    auto d = decompose_k2t(fan_graph(6), 3);
    REQUIRE(d.partition);
    check_tree_parts(fan_graph(6), *d.partition, 1, 2);
  }
  SUBCASE("outerplanar corpus and certificates elsewhere") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Graph g = testing::outerplanar(25, seed);
      auto d = decompose_k2t(g, 3);
      REQUIRE(d.partition);
      check_tree_parts(g, *d.partition, 1, 2);
      for (int t = 2; t <= 4; ++t) {
        Graph h = testing::triangulation(25, seed);
        auto e = decompose_k2t(h, t);
        if (e.certificate) {
          CHECK(oracle::validate_minor_model(h, *e.certificate).ok);
        } else {
          check_tree_parts(h, *e.partition, 1, t - 1);
        }
      }
    }
  }
  SUBCASE("t < 1 is rejected") { CHECK_THROWS_AS(decompose_k2t(path_graph(3), 0), PreconditionError); }
}

TEST_CASE("colour_k2t_defect") {
  SUBCASE("C6") {
    auto c = colour_k2t_defect(cycle_graph(6), 2);
    REQUIRE(c.colouring);
    CHECK(c.colouring->num_colours <= 2);
    CHECK(c.colouring->defect <= 2);
  }
  SUBCASE("fan") {
    auto c = colour_k2t_defect(fan_graph(6), 3);
    REQUIRE(c.colouring);
    CHECK(c.colouring->num_colours <= 2);
    CHECK(c.colouring->defect <= 4);
  }
  SUBCASE("P5") {
    auto c = colour_k2t_defect(path_graph(5), 2);
    REQUIRE(c.colouring);
    CHECK(c.colouring->defect <= 2);
  }
}

TEST_CASE("three_colour_k2t") {
  SUBCASE("triangle") {
    auto out = three_colour_k2t(complete_graph(3), 2, Edge{0, 1});
    REQUIRE(std::holds_alternative<std::vector<int>>(out));
    auto m = oracle::validate_colouring(complete_graph(3), std::get<std::vector<int>>(out));
    CHECK(m.clustering == 1);
    CHECK(m.num_colours == 3);
  }
  SUBCASE("fan") {
    Graph g = fan_graph(6);
    auto out = three_colour_k2t(g, 3);
    REQUIRE(std::holds_alternative<std::vector<int>>(out));
    const auto& colour = std::get<std::vector<int>>(out);
    auto m = oracle::validate_colouring(g, colour);
    CHECK(m.num_colours <= 3);
    CHECK(m.clustering <= 2);
    check_anchor(g, colour, {0, g.neighbours(0).front()});
  }
  SUBCASE("K4 gives K*2,2") {
    auto out = three_colour_k2t(complete_graph(4), 2);
    REQUIRE(std::holds_alternative<MinorModel>(out));
    CHECK(oracle::validate_minor_model(complete_graph(4), std::get<MinorModel>(out)).ok);
  }
  SUBCASE("anchor must be an edge") {
    CHECK_THROWS_AS(three_colour_k2t(path_graph(3), 2, Edge{0, 2}), PreconditionError);
  }
  SUBCASE("random outerplanar graphs with every anchor kind") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Graph g = testing::outerplanar(12 + static_cast<int>(seed % 20), seed);
      auto edges = g.edges();
      Edge anchor = edges[seed % edges.size()];
      auto out = three_colour_k2t(g, 3, anchor);
      REQUIRE(std::holds_alternative<std::vector<int>>(out));
      const auto& colour = std::get<std::vector<int>>(out);
      auto m = oracle::validate_colouring(g, colour);
      CHECK(m.num_colours <= 3);
      CHECK(m.clustering <= 2);
      check_anchor(g, colour, anchor);
    }
  }
  SUBCASE("general graphs give a colouring or a valid model") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Graph g = testing::thinned(testing::triangulation(20, seed), seed);
      for (int t = 2; t <= 4; ++t) {
        auto out = three_colour_k2t(g, t);
        if (auto* model = std::get_if<MinorModel>(&out)) {
          CHECK(model->pattern == Pattern::complete_join(2, t));
          CHECK(oracle::validate_minor_model(g, *model).ok);
        } else {
          auto m = oracle::validate_colouring(g, std::get<std::vector<int>>(out));
          CHECK(m.num_colours <= 3);
          CHECK(m.clustering <= t - 1);
        }
      }
    }
  }
  SUBCASE("disconnected input colours each component") {
    Graph g = disjoint_union(cycle_graph(5), path_graph(4));
    auto out = three_colour_k2t(g, 2);
    REQUIRE(std::holds_alternative<std::vector<int>>(out));
    CHECK(oracle::validate_colouring(g, std::get<std::vector<int>>(out)).clustering == 1);
  }
}

TEST_CASE("separator_ab") {
  SUBCASE("P3") {
    Graph g = path_graph(3);
    auto out = separator_ab(g, std::vector<Vertex>{0}, std::vector<Vertex>{2}, 2);
    REQUIRE(out.subtree);
    CHECK(out.subtree->leaves.size() <= 5);
    CHECK(separates(g, {0}, {2}, out.subtree->vertices));
  }
  SUBCASE("grid columns") {
    Graph g = grid_graph(3, 3);
    VertexSet a{0, 3, 6}, b{2, 5, 8};
    auto out = separator_ab(g, a, b, 2);
    REQUIRE(out.subtree);
    CHECK(out.subtree->leaves.size() <= 5);
    CHECK(separates(g, a, b, out.subtree->vertices));
  }
  SUBCASE("many disjoint paths give a K1,t model") {
    // Hub 0 joined to a and b by five disjoint paths each through their own middle vertex.
    std::vector<Edge> edges;
    const Vertex a = 1, b = 2;
    for (int i = 0; i < 5; ++i) {
      Vertex m = 3 + i;
      edges.emplace_back(a, m);
      edges.emplace_back(m, b);
      edges.emplace_back(0, m);
    }
    Graph g(8, edges);
    auto out = separator_ab(g, std::vector<Vertex>{a}, std::vector<Vertex>{b}, 4);
    if (out.certificate) {
      CHECK(out.certificate->pattern == Pattern::complete_join(1, 4));
      CHECK(oracle::validate_minor_model(g, *out.certificate).ok);
    } else {
      REQUIRE(out.subtree);
      CHECK(separates(g, {a}, {b}, out.subtree->vertices));
    }
  }
  SUBCASE("random graphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      Graph g = testing::connected(30, 20, seed);
      Rng rng(seed);
      auto a = testing::sample(30, 1 + rng.below(4), rng);
      auto b = testing::sample(30, 1 + rng.below(4), rng);
      const int t = 2 + static_cast<int>(seed % 3);
      auto out = separator_ab(g, a, b, t);
      if (out.certificate) {
        CHECK(oracle::validate_minor_model(g, *out.certificate).ok);
        for (const auto& set : out.certificate->branch_sets) {
          auto meets = [&](const VertexSet& s) {
            return std::any_of(set.begin(), set.end(), [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); });
          };
          CHECK(meets(a));
          CHECK(meets(b));
        }
      } else {
        REQUIRE(out.subtree);
        CHECK(static_cast<int>(out.subtree->leaves.size()) <= 2 * t + 1);
        CHECK(separates(g, a, b, out.subtree->vertices));
      }
    }
  }
}

TEST_CASE("decompose_k3t") {
  SUBCASE("octahedron") {
    auto d = decompose_k3t(octahedron_graph(), 3);
    REQUIRE(d.partition);
    check_tree_parts(octahedron_graph(), *d.partition, 2, 7);
  }
  SUBCASE("K7 gives K*3,3") {
    auto d = decompose_k3t(complete_graph(7), 3);
    REQUIRE(d.certificate);
    CHECK(d.certificate->pattern == Pattern::complete_join(3, 3));
    CHECK(oracle::validate_minor_model(complete_graph(7), *d.certificate).ok);
  }
  SUBCASE("grid") {
    auto d = decompose_k3t(grid_graph(4, 4), 3);
    REQUIRE(d.partition);
    check_tree_parts(grid_graph(4, 4), *d.partition, 2, 7);
  }
  SUBCASE("planar corpus") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Graph g = testing::triangulation(40, seed);
      auto d = decompose_k3t(g, 3);
      REQUIRE(d.partition);
      check_tree_parts(g, *d.partition, 2, 7);
    }
  }
  SUBCASE("dense graphs give valid models") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Graph g = testing::connected(25, 80, seed);
      auto d = decompose_k3t(g, 3);
      if (d.certificate) {
        CHECK(oracle::validate_minor_model(g, *d.certificate).ok);
      } else {
        check_tree_parts(g, *d.partition, 2, 7);
      }
    }
  }
}

TEST_CASE("decompose_kst") {
  SUBCASE("P6 with s=1, t=3") {
    auto d = decompose_kst(path_graph(6), 1, 3);
    REQUIRE(d.partition);
    CHECK(validate_partition(path_graph(6), *d.partition).measured_width <= 1);
    for (const auto& info : d.partition->info) CHECK(info.pieces.size() <= 2);
  }
  SUBCASE("K6 with s=t=2") {
    auto d = decompose_kst(complete_graph(6), 2, 2);
    REQUIRE(d.certificate);
    CHECK(d.certificate->pattern == Pattern::complete_join(2, 2));
    CHECK(oracle::validate_minor_model(complete_graph(6), *d.certificate).ok);
  }
  SUBCASE("grid with s=t=3") {
    auto d = decompose_kst(grid_graph(5, 5), 3, 3);
    REQUIRE(d.partition);
    CHECK(validate_partition(grid_graph(5, 5), *d.partition).measured_width <= 3);
    for (const auto& info : d.partition->info) CHECK(info.pieces.size() <= 6);
  }
  SUBCASE("pieces are shortest paths covering each part") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Graph g = testing::triangulation(30, seed);
      for (int s = 1; s <= 3; ++s) {
        const int t = 3;
        auto d = decompose_kst(g, s, t);
        if (d.certificate) {
          CHECK(oracle::validate_minor_model(g, *d.certificate).ok);
          continue;
        }
        auto report = validate_partition(g, *d.partition);
        CHECK(report.ok());
        CHECK(report.measured_width <= s);
        for (std::size_t i = 0; i < d.partition->parts.size(); ++i) {
          const auto& info = d.partition->info[i];
          CHECK(static_cast<int>(info.pieces.size()) <= std::max(1, s * (t - 1)));
          VertexSet cover;
          for (const auto& piece : info.pieces) {
            for (std::size_t j = 0; j + 1 < piece.size(); ++j) CHECK(g.has_edge(piece[j], piece[j + 1]));
            cover.insert(cover.end(), piece.begin(), piece.end());
          }
          CHECK(sorted_set(cover) == d.partition->parts[i]);
        }
      }
    }
  }
  SUBCASE("s > t is rejected") { CHECK_THROWS_AS(decompose_kst(path_graph(3), 3, 2), PreconditionError); }
}

TEST_CASE("colour_k3t") {
  SUBCASE("octahedron defect") {
    auto c = colour_k3t(octahedron_graph(), 3, K3tColourMode::defect);
    REQUIRE(c.colouring);
    CHECK(c.colouring->num_colours <= 3);
    CHECK(c.colouring->defect <= 14);
  }
  SUBCASE("grid layered6") {
    auto c = colour_k3t(grid_graph(4, 4), 3, K3tColourMode::layered6);
    REQUIRE(c.colouring);
    CHECK(c.colouring->num_colours <= 6);
    CHECK(c.colouring->clustering <= 2);
  }
  SUBCASE("K1 in every mode") {
    for (auto mode : {K3tColourMode::defect, K3tColourMode::clustered6, K3tColourMode::layered6}) {
      auto c = colour_k3t(Graph(1, {}), 3, mode);
      REQUIRE(c.colouring);
      CHECK(c.colouring->num_colours == 1);
      CHECK(c.colouring->defect == 0);
      CHECK(c.colouring->clustering == 1);
    }
  }
  SUBCASE("planar corpus, all modes") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Graph g = testing::triangulation(35, seed);
      const int t = 3;
      for (auto mode : {K3tColourMode::defect, K3tColourMode::clustered6, K3tColourMode::layered6}) {
        auto c = colour_k3t(g, t, mode);
        if (c.certificate) {
          CHECK(oracle::validate_minor_model(g, *c.certificate).ok);
          continue;
        }
        auto m = oracle::validate_colouring(g, c.colouring->colour);
        if (mode == K3tColourMode::defect) {
          CHECK(m.num_colours <= 3);
          CHECK(m.defect <= 4 * t + 2);
        } else if (mode == K3tColourMode::clustered6) {
          CHECK(m.num_colours <= 6);
          CHECK(m.clustering <= 2 * t + 1);
        } else {
          CHECK(m.num_colours <= 6);
          CHECK(m.clustering <= t - 1);
        }
      }
    }
  }
  SUBCASE("mode names") {
    for (auto mode : {K3tColourMode::defect, K3tColourMode::clustered6, K3tColourMode::layered6}) {
      CHECK(parse_k3t_mode(to_string(mode)) == mode);
    }
    CHECK_FALSE(parse_k3t_mode("nope"));
  }
}
