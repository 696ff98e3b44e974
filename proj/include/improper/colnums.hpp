#pragma once

#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// S_r(v): v and every x before v reachable by a path of length at most r
/// whose interior vertices all come after v.
[[nodiscard]] VertexSet sreach(const Graph& g, const VertexOrdering& ord, Vertex v, int r);

/// W_r(v): v and every x before v reachable by a path of length at most r
/// whose interior vertices all come after x.
[[nodiscard]] VertexSet wreach(const Graph& g, const VertexOrdering& ord, Vertex v, int r);

/// max_v |S_r(v)| and max_v |W_r(v)| for the given ordering.
[[nodiscard]] int scol(const Graph& g, const VertexOrdering& ord, int r);
[[nodiscard]] int wcol(const Graph& g, const VertexOrdering& ord, int r);

struct ExactColouringNumber {
  int value = 0;
  VertexOrdering witness;
};

inline constexpr int kExactColnumCap = 9;

/// Minimum over all orderings; throws CapExceeded when n > 9.
[[nodiscard]] ExactColouringNumber exact_scol(const Graph& g, int r);
[[nodiscard]] ExactColouringNumber exact_wcol(const Graph& g, int r);

/// Smallest-last ordering: every vertex has at most degeneracy(g) earlier
/// neighbours.
[[nodiscard]] VertexOrdering degeneracy_ordering(const Graph& g);

/// Tree decomposition together with a layering. Node ids are 0..nodes-1,
/// the tree is rooted at node 0.
struct LayeredTD {
  int nodes = 0;
  std::vector<Edge> tree_edges;
  std::vector<VertexSet> bags;
  std::vector<VertexSet> layers;
  int layered_width = 0;
};

enum class LayeredTDStatus { ok, not_tree, coverage, subtree, layering, width };

[[nodiscard]] std::string to_string(LayeredTDStatus s);

struct LayeredTDReport {
  LayeredTDStatus status = LayeredTDStatus::ok;
  int measured_width = 0;
  std::string detail;
  [[nodiscard]] bool ok() const { return status == LayeredTDStatus::ok; }
};

[[nodiscard]] LayeredTDReport validate_layered_td(const Graph& g, const LayeredTD& td);

/// Vertices sorted by the depth of their home bag (the shallowest bag
/// containing them, smallest node on ties), then by id. Throws
/// PreconditionError naming the violation if the decomposition is invalid.
[[nodiscard]] VertexOrdering layered_ordering(const Graph& g, const LayeredTD& td);

/// Path decomposition of the p x q grid with bag i = rows i and i+1,
/// layered by columns, so every bag meets every layer in at most 2 vertices.
[[nodiscard]] LayeredTD grid_layered_td(int p, int q);

}  // namespace improper
