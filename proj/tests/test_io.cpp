#include "doctest.h"
#include "improper/generators.hpp"
#include "improper/io.hpp"
#include "improper/kt_decomp.hpp"

using namespace improper;

namespace {

int error_line(const std::string& text) {
  try {
    (void)parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::string error_text(const std::string& text) {
  try {
    (void)parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("3 2\n0 1\n1 2") == path_graph(3));
  CHECK(parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3") == complete_graph(4));
  CHECK(parse_edge_list("\n3 1\n\n1 2\n").size() == 1);
}

TEST_CASE("edge list errors are distinct and name the line") {
  CHECK(error_line("2 1\n0 0") == 2);
  CHECK(error_text("2 1\n0 0").find("loop") != std::string::npos);
  CHECK(error_text("3 2\n0 1\n1 0").find("duplicate") != std::string::npos);
  CHECK(error_line("3 2\n0 1\n1 0") == 3);
  CHECK(error_text("3 1\n0 3").find("out of range") != std::string::npos);
  CHECK(error_text("3 1\n0 x").find("malformed edge") != std::string::npos);
  CHECK(error_text("three 1").find("malformed header") != std::string::npos);
  CHECK(error_text("3 2\n0 1").find("expected 2 edges") != std::string::npos);
  CHECK(error_text("3 1\n0 1\n1 2").find("more edges") != std::string::npos);
  CHECK(error_text("").find("empty") != std::string::npos);
}

TEST_CASE("round trips") {
  Graph g = petersen_graph();
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(read_graph(to_json(g).dump(), "json") == g);
  CHECK_THROWS_AS(read_graph("{", "json"), ParseError);

  auto d = decompose_kt(octahedron_graph(), 5);
  REQUIRE(d.partition);
  auto back = partition_from_json(to_json(*d.partition));
  CHECK(back.parts == d.partition->parts);
  CHECK(back.width == d.partition->width);

  auto m = make_model(Pattern::complete_join(2, 3), {{0}, {1}, {2}, {3}, {4}});
  auto j = to_json(m);
  CHECK(j["pattern"] == "K*2,3");
  CHECK(j["roles"] == Json::array({0, 0, 1, 1, 1}));
  auto mb = model_from_json(j);
  CHECK(mb.pattern == m.pattern);
  CHECK(mb.branch_sets == m.branch_sets);
}

TEST_CASE("DOT export") {
  std::vector<int> colour{1, 2, 1};
  auto dot = to_dot(path_graph(3), &colour);
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("fillcolor=\"/set312/2\"") != std::string::npos);
}
