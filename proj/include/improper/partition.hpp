#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/colouring.hpp"
#include "improper/graph.hpp"
#include "improper/minor_model.hpp"

namespace improper {

enum class TreeKind { none, bfs, lexbfs };

/// Optional structure recorded for one part.
struct PartInfo {
  Vertex root = -1;
  VertexSet terminals;
  TreeKind tree_kind = TreeKind::none;
  /// (child, parent) pairs of the spanning subtree, when tree_kind != none.
  std::vector<Edge> tree_edges;
  VertexSet leaves;
  /// Paths listed in construction order, each along the path.
  std::vector<std::vector<Vertex>> pieces;
};

/// Ordered partition into connected parts together with the width the
/// construction guarantees.
struct ConnectedPartition {
  std::vector<VertexSet> parts;
  int width = 0;
  std::vector<PartInfo> info;

  /// part_of[v] = index of the part containing v.
  [[nodiscard]] std::vector<int> part_of(int n) const;
  /// max(1, largest leaf count over parts).
  [[nodiscard]] int max_leaves() const;
};

/// Either a partition or a minor certificate.
struct DecompositionOutcome {
  std::optional<ConnectedPartition> partition;
  std::optional<MinorModel> certificate;
};

enum class PartitionStatus { ok, overlap, not_covering, disconnected_part, width_exceeded };

struct PartitionReport {
  PartitionStatus status = PartitionStatus::ok;
  int measured_width = 0;
  std::string detail;

  [[nodiscard]] bool ok() const { return status == PartitionStatus::ok; }
};

[[nodiscard]] std::string to_string(PartitionStatus s);

/// Recomputes connectivity of every part and the true width.
[[nodiscard]] PartitionReport validate_partition(const Graph& g, const ConnectedPartition& p);

/// Parts as vertices; i ~ j iff H_i and H_j are adjacent in g.
[[nodiscard]] Graph quotient(const Graph& g, const ConnectedPartition& p);

/// Greedy colouring of q in vertex order with the smallest free colour.
/// Throws PreconditionError if a vertex has more than k earlier neighbours.
[[nodiscard]] std::vector<int> greedy_part_colouring(const Graph& q, int k);

enum class PartitionColouringMode { bfs_defect, lex_defect, clustered };

/// Colourings derived from a partition with tree metadata:
///   bfs_defect  part colour, defect <= 3p-1
///   lex_defect  part colour, defect <= 2p
///   clustered   part colour x depth parity, clustering <= p
/// where p = p.max_leaves(). Throws PreconditionError on missing metadata.
[[nodiscard]] Colouring partition_colourings(const Graph& g, const ConnectedPartition& p, PartitionColouringMode mode);

/// Guaranteed bound for the mode: a defect bound for the defect modes and a
/// clustering bound for clustered.
[[nodiscard]] int partition_colouring_bound(const ConnectedPartition& p, PartitionColouringMode mode);

/// Parts in order, pieces in order, vertices along each piece.
/// Throws PreconditionError if some part lacks pieces covering it exactly.
[[nodiscard]] VertexOrdering partition_ordering(const Graph& g, const ConnectedPartition& p);

/// Pieces of a rooted subtree: the root path of the first leaf, then for each
/// further leaf the path from the highest uncovered ancestor down to it.
/// Leaves are taken in ascending id order.
[[nodiscard]] std::vector<std::vector<Vertex>> subtree_pieces(Vertex root, const std::vector<Edge>& tree_edges,
                                                              const VertexSet& leaves);

}  // namespace improper
