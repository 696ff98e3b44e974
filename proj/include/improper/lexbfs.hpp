#pragma once

#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Rooted LexBFS spanning tree of a connected graph, or of the connected
/// subgraph g[within] when built with a mask.
///
/// layers[i] lists the vertices at distance i from the root in visit order;
/// position[v] is the index of v inside its layer. Vertices outside the
/// spanned set have parent, layer_index and position equal to -1.
struct LexTree {
  Vertex root = -1;
  std::vector<Vertex> parent;
  std::vector<int> layer_index;
  std::vector<int> position;
  std::vector<std::vector<Vertex>> layers;

  [[nodiscard]] bool contains(Vertex v) const { return layer_index[v] >= 0; }
  [[nodiscard]] int depth() const { return static_cast<int>(layers.size()) - 1; }
  /// Vertices in visit order (layers concatenated).
  [[nodiscard]] std::vector<Vertex> visit_order() const;
  /// Spanned vertices, sorted.
  [[nodiscard]] VertexSet vertices() const;
  /// Path from v up to the root, v first.
  [[nodiscard]] std::vector<Vertex> root_path(Vertex v) const;
  /// Leaves (non-root vertices without children).
  [[nodiscard]] VertexSet leaves() const;
};

/// LexBFS by partition refinement. The next vertex is the smallest id in the
/// first class; the parent of v is its earliest visited neighbour.
/// Throws PreconditionError if the graph (or g[within]) is disconnected or
/// the root is invalid.
[[nodiscard]] LexTree lexbfs_tree(const Graph& g, Vertex root, const VertexMask* within = nullptr);

/// Checks the BFS, priority and non-crossing rules directly from their
/// definitions. The tree must span g, or g[within] when a mask is given.
[[nodiscard]] bool check_lex_rules(const Graph& g, const LexTree& t, const VertexMask* within = nullptr);

/// Subtree of a LexTree containing the root. The root is never a leaf.
struct LexSubtree {
  Vertex root = -1;
  VertexSet vertices;
  VertexSet leaves;
  /// parent[v] for members other than the root; -1 elsewhere.
  std::vector<Vertex> parent;
  /// depth[v] = layer index in the host tree for members; -1 elsewhere.
  std::vector<int> depth;

  [[nodiscard]] bool contains(Vertex v) const { return depth[v] >= 0; }
};

/// Union of the root paths of t to every vertex of a.
[[nodiscard]] LexSubtree subtree_to(const LexTree& t, std::span<const Vertex> a);

/// |N(v) ∩ V(s)|.
[[nodiscard]] int neighbour_count_in(const Graph& g, const LexSubtree& s, Vertex v);

/// Concatenated layer orders of a tree that spans all of g.
[[nodiscard]] VertexOrdering bandwidth_ordering(const Graph& g, const LexTree& t);

/// Layering of the spanned vertices by distance from the root.
[[nodiscard]] std::vector<VertexSet> layering(const LexTree& t);

}  // namespace improper
