#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/colouring.hpp"
#include "improper/graph.hpp"

namespace improper {

/// Spanning tree of g whose every fundamental cut has at most k edges of g.
struct CutTree {
  std::vector<Edge> tree_edges;
  int k = 0;
};

struct CutTreeReport {
  bool ok = true;
  int worst_cut = 0;
  std::optional<Edge> offending;  // first tree edge whose cut exceeds k
  std::string detail;
};

[[nodiscard]] CutTreeReport check_cut_tree(const Graph& g, const CutTree& ct);

/// 2-colouring with defect at most ct.k. Throws PreconditionError naming the
/// offending tree edge if a cut exceeds k.
[[nodiscard]] Colouring tree_cut_2colour(const Graph& g, const CutTree& ct);

/// Partition of V(g) into bags indexed by the nodes of a tree; bags may be
/// empty. `multiplicity` scales the defect bound for multigraph inputs.
struct TPartition {
  int nodes = 0;
  std::vector<Edge> tree_edges;
  std::vector<VertexSet> bags;
  int multiplicity = 1;
};

struct TPartitionStats {
  int adhesion = 0;  // max edges of g across a tree-edge cut
  int max_bag = 0;
  [[nodiscard]] long long defect_bound(int multiplicity) const;
};

/// Throws PreconditionError if the bags do not partition V(g) or the tree is
/// not a tree on the nodes.
[[nodiscard]] TPartitionStats tpartition_stats(const Graph& g, const TPartition& tp);

/// Colours the bag quotient with tree_cut_2colour (k = adhesion) and lifts
/// the colours to the vertices.
[[nodiscard]] Colouring tpartition_2colour(const Graph& g, const TPartition& tp);

}  // namespace improper
