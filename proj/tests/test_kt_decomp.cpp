#include <algorithm>

#include "doctest.h"
#include "improper/generators.hpp"
#include "improper/kt_decomp.hpp"
#include "improper/oracles.hpp"
#include "support.hpp"

using namespace improper;

namespace {

void check_kt_partition(const Graph& g, int t, const ConnectedPartition& p) {
  auto report = validate_partition(g, p);
  CHECK(report.ok());
  CHECK(report.measured_width <= t - 2);
  auto chord = oracle::is_chordal(quotient(g, p));
  CHECK(chord.chordal);
  CHECK(chord.max_clique <= t - 1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    const int k = static_cast<int>(p.info[i].terminals.size());
    CHECK(k <= t - 2);
    CHECK(part_bandwidth(g, part, p.info[i].terminals) <= std::max(1, k - 1));
    for (Vertex v : part) CHECK(testing::neighbours_in(g, v, part) <= std::max(0, k));
  }
}

}  // namespace

TEST_CASE("decompose_kt examples") {
  SUBCASE("triangle") {
    auto d = decompose_kt(complete_graph(3), 4);
    REQUIRE(d.partition);
    CHECK(d.partition->parts == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(d.partition->width == 2);
  }
  SUBCASE("K5 gives a K5 model") {
    auto d = decompose_kt(complete_graph(5), 5);
    REQUIRE(d.certificate);
    CHECK(d.certificate->pattern == Pattern::complete(5));
    for (const auto& b : d.certificate->branch_sets) CHECK(b.size() == 1);
    CHECK(oracle::validate_minor_model(complete_graph(5), *d.certificate).ok);
  }
  SUBCASE("octahedron") {
    Graph g = octahedron_graph();
    auto d = decompose_kt(g, 5);
    REQUIRE(d.partition);
    check_kt_partition(g, 5, *d.partition);
  }
  SUBCASE("t below 4") { CHECK_THROWS_AS(decompose_kt(complete_graph(3), 3), PreconditionError); }
}

TEST_CASE("decompose_kt on minor-free families") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = testing::triangulation(40, seed);
    auto d = decompose_kt(g, 5);
    REQUIRE(d.partition);
    check_kt_partition(g, 5, *d.partition);
  }
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Graph g = testing::ktree(30, k, seed);
      auto d = decompose_kt(g, k + 2);
      REQUIRE(d.partition);
      check_kt_partition(g, k + 2, *d.partition);
    }
  }
}

TEST_CASE("decompose_kt certificates are valid models") {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = testing::connected(25, 60, seed);
    for (int t = 4; t <= 6; ++t) {
      auto d = decompose_kt(g, t);
      if (d.certificate) {
        ++found;
        CHECK(oracle::validate_minor_model(g, *d.certificate).ok);
        CHECK(d.certificate->pattern == Pattern::complete(t));
      } else {
        CHECK(validate_partition(g, *d.partition).measured_width <= t - 2);
      }
    }
  }
  CHECK(found > 0);
}

TEST_CASE("colour_kt") {
  SUBCASE("octahedron defect") {
    auto c = colour_kt(octahedron_graph(), 5, KtColourMode::defect);
    REQUIRE(c.colouring);
    auto m = oracle::validate_colouring(octahedron_graph(), c.colouring->colour);
    CHECK(m.num_colours <= 4);
    CHECK(m.defect <= 3);
  }
  SUBCASE("octahedron clustered") {
    auto c = colour_kt(octahedron_graph(), 5, KtColourMode::clustered);
    REQUIRE(c.colouring);
    auto m = oracle::validate_colouring(octahedron_graph(), c.colouring->colour);
    CHECK(m.num_colours <= 8);
    CHECK(m.clustering <= 2);
  }
  SUBCASE("C5 defect") {
    auto c = colour_kt(cycle_graph(5), 4, KtColourMode::defect);
    REQUIRE(c.colouring);
    CHECK(c.colouring->num_colours <= 3);
    CHECK(c.colouring->defect <= 2);
  }
  SUBCASE("every mode on random minor-free graphs") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      for (int k : {2, 3, 4}) {
        const int t = k + 2;
        Graph g = testing::ktree(35, k, seed);
        for (auto mode : {KtColourMode::defect, KtColourMode::clustered, KtColourMode::paths,
                          KtColourMode::independent, KtColourMode::treewidth}) {
          auto out = colour_kt(g, t, mode);
          REQUIRE(out.colouring);
          const auto& colour = out.colouring->colour;
          auto m = oracle::validate_colouring(g, colour);
          auto profile = oracle::colour_class_profile(g, colour);
          switch (mode) {
            case KtColourMode::defect:
            case KtColourMode::treewidth:
              CHECK(m.num_colours <= t - 1);
              CHECK(m.defect <= t - 2);
              break;
            case KtColourMode::clustered:
              CHECK(m.num_colours <= 2 * t - 2);
              CHECK(m.clustering <= (t - 1) / 2);
              break;
            case KtColourMode::paths:
              CHECK(m.num_colours <= 2 * t - 2);
              for (const auto& cls : profile) CHECK(cls.path_forest);
              break;
            case KtColourMode::independent:
              CHECK(m.num_colours <= 3 * t - 3);
              for (const auto& cls : profile) {
                if (cls.colour % 3 == 1) CHECK(cls.max_component <= 1);
                if (cls.colour % 3 != 1) CHECK(cls.independent);
              }
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("mode names round-trip") {
  for (auto mode : {KtColourMode::defect, KtColourMode::clustered, KtColourMode::paths, KtColourMode::independent,
                    KtColourMode::treewidth}) {
    CHECK(parse_kt_mode(to_string(mode)) == mode);
  }
  CHECK_FALSE(parse_kt_mode("nope"));
}
