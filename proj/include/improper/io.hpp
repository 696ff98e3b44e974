#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "improper/colnums.hpp"
#include "improper/colouring.hpp"
#include "improper/graph.hpp"
#include "improper/immersion.hpp"
#include "improper/lexbfs.hpp"
#include "improper/minor_model.hpp"
#include "improper/partition.hpp"
#include "json.hpp"

namespace improper {

using Json = nlohmann::ordered_json;

/// Malformed input; `line` is 1-based (0 when not tied to a line).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

/// "n m" followed by m lines "u v". Blank lines are skipped. Loops,
/// duplicate edges, out-of-range ids, malformed lines and a wrong edge count
/// each raise a distinct ParseError.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string to_edge_list(const Graph& g);

/// {"n": .., "edges": [[u, v], ..]}
[[nodiscard]] Json to_json(const Graph& g);
[[nodiscard]] Graph graph_from_json(const Json& j);

/// Reads a graph in "edgelist" or "json" format.
[[nodiscard]] Graph read_graph(std::string_view text, const std::string& format);

[[nodiscard]] Json to_json(const ConnectedPartition& p);
[[nodiscard]] ConnectedPartition partition_from_json(const Json& j);
[[nodiscard]] Json to_json(const Colouring& c);
[[nodiscard]] Json to_json(const MinorModel& m);
[[nodiscard]] MinorModel model_from_json(const Json& j);
[[nodiscard]] Json to_json(const LexTree& t);
[[nodiscard]] Json to_json(const CutTree& ct);
[[nodiscard]] CutTree cut_tree_from_json(const Json& j);
[[nodiscard]] Json to_json(const TPartition& tp);
[[nodiscard]] TPartition tpartition_from_json(const Json& j);
[[nodiscard]] Json to_json(const LayeredTD& td);
[[nodiscard]] LayeredTD layered_td_from_json(const Json& j);

/// Undirected DOT; vertices with a positive colour are filled from the
/// set312 palette.
[[nodiscard]] std::string to_dot(const Graph& g, const std::vector<int>* colour = nullptr);

}  // namespace improper
