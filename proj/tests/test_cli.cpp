#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "improper/cli.hpp"
#include "improper/generators.hpp"
#include "improper/io.hpp"

using namespace improper;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] Json report() const { return Json::parse(out.substr(0, out.find('\n'))); }
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("improper_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("decomp kt on the octahedron") {
  auto r = run({"decomp", "kt", "--t", "5"}, to_edge_list(octahedron_graph()));
  CHECK(r.code == cli::kExitPass);
  auto j = r.report();
  CHECK(j["op"] == "decomp");
  CHECK(j["outcome"] == "partition");
  CHECK(j["partition"]["width"].get<int>() <= 3);
  CHECK(j["pass"] == true);
}

TEST_CASE("colour kt on K5 surfaces the certificate") {
  const std::string k5 = to_edge_list(complete_graph(5));
  auto r = run({"colour", "kt", "--t", "5", "--mode", "defect"}, k5);
  CHECK(r.code == cli::kExitViolation);
  auto j = r.report();
  CHECK(j["outcome"] == "certificate");
  CHECK(j["certificate"]["pattern"] == "K5");

  auto graph = scratch("k5.txt", k5);
  auto cert = scratch("k5_cert.json", r.out);
  auto v = run({"verify", "--input", graph, "--certificate", cert});
  CHECK(v.code == cli::kExitPass);
  CHECK(v.report()["pass"] == true);
}

TEST_CASE("colnum layered on a grid") {
  auto r = run({"colnum", "--ordering", "layered", "--r", "2"}, to_edge_list(grid_graph(4, 4)));
  CHECK(r.code == cli::kExitPass);
  auto j = r.report();
  bool saw_scol = false;
  for (const auto& b : j["bounds"]) {
    if (b["name"] == "scol") {
      saw_scol = true;
      CHECK(b["measured"].get<int>() <= 10);
    }
  }
  CHECK(saw_scol);
}

TEST_CASE("errors map to exit codes") {
  auto loop = run({"decomp", "kt", "--t", "5"}, "2 1\n0 0\n");
  CHECK(loop.code == cli::kExitUsage);
  CHECK(loop.err.find("line 2") != std::string::npos);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"decomp", "kt"}, "1 0\n").code == cli::kExitUsage);
  CHECK(run({"decomp", "kt", "--t", "3"}, "1 0\n").code == cli::kExitUsage);
  CHECK(run({"oracle", "treewidth"}, to_edge_list(path_graph(30))).code == cli::kExitUsage);
}

TEST_CASE("gen writes graphs that read back") {
  auto r = run({"gen", "grid", "--param", "p=3", "--param", "q=4"});
  CHECK(r.code == cli::kExitPass);
  CHECK(parse_edge_list(r.out) == grid_graph(3, 4));
  auto j = run({"--format", "json", "gen", "petersen"});
  CHECK(graph_from_json(Json::parse(j.out)) == petersen_graph());
  CHECK(run({"gen", "grid", "--param", "p"}).code == cli::kExitUsage);
}

TEST_CASE("reports are deterministic") {
  const std::string g = to_edge_list(generate("planar_triangulation", {{"n", 40}}, 3));
  for (std::vector<std::string> args : {std::vector<std::string>{"colour", "k3t", "--t", "3", "--mode", "defect"},
                                        std::vector<std::string>{"decomp", "kst", "--s", "2", "--t", "3"},
                                        std::vector<std::string>{"colnum", "--ordering", "k2t", "--t", "4", "--r", "2"}}) {
    auto a = run(args, g);
    auto b = run(args, g);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("every subcommand on a planar graph") {
  const std::string g = to_edge_list(generate("planar_triangulation", {{"n", 12}}, 5));
  std::vector<std::vector<std::string>> commands{
      {"decomp", "k2t", "--t", "6"},
      {"decomp", "k3t", "--t", "3"},
      {"colour", "kt", "--t", "5", "--mode", "clustered"},
      {"colour", "kt", "--t", "5", "--mode", "paths"},
      {"colour", "kt", "--t", "5", "--mode", "independent"},
      {"colour", "kt", "--t", "5", "--mode", "treewidth"},
      {"colour", "k3t", "--t", "3", "--mode", "layered6"},
      {"colnum", "--ordering", "degeneracy", "--r", "2"},
      {"colnum", "--ordering", "identity", "--r", "1"},
      {"oracle", "minor", "--pattern", "K5"},
      {"oracle", "chordal"},
      {"oracle", "treewidth"},
      {"oracle", "degeneracy"},
  };
  for (const auto& args : commands) {
    auto r = run(args, g);
    INFO(args[0] << " " << args[1]);
    CHECK(r.code == cli::kExitPass);
    CHECK(r.report().contains("op"));
  }
}

TEST_CASE("cut tree and T-partition colourings read their structure") {
  const std::string g = to_edge_list(cycle_graph(6));
  auto ct = scratch("ct.json", R"({"k":2,"tree_edges":[[0,1],[1,2],[2,3],[3,4],[4,5]]})");
  auto r = run({"colour", "cuttree", "--structure", ct}, g);
  CHECK(r.code == cli::kExitPass);
  CHECK(r.report()["outcome"] == "colouring");
  auto bad = scratch("ct_bad.json", R"({"k":1,"tree_edges":[[0,1],[1,2],[2,3],[3,4],[4,5]]})");
  CHECK(run({"colour", "cuttree", "--structure", bad}, g).code == cli::kExitViolation);
  auto tp = scratch("tp.json", R"({"nodes":2,"tree_edges":[[0,1]],"bags":[[0,1,2],[3,4,5]]})");
  CHECK(run({"colour", "tpartition", "--structure", tp}, g).code == cli::kExitPass);
}

TEST_CASE("DOT output") {
  auto dot = std::filesystem::temp_directory_path() / "improper_cli_out.dot";
  auto r = run({"--dot", dot.string(), "colour", "kt", "--t", "5"}, to_edge_list(octahedron_graph()));
  CHECK(r.code == cli::kExitPass);
  std::ifstream in(dot);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("fillcolor") != std::string::npos);
}
