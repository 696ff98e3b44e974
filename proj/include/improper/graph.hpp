#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace improper {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Membership flags indexed by vertex id.
using VertexMask = std::vector<std::uint8_t>;

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential oracle was asked to run above its hard size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Simple undirected graph on the vertex ids 0..n-1.
///
/// Adjacency lists are sorted, symmetric and loop-free. A Graph never
/// changes after construction; every operation below returns a new value.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Throws PreconditionError on loops,
  /// duplicate edges or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds a graph, silently dropping loops and repeated edges.
  static Graph simplified(int n, std::span<const Edge> edges);

  [[nodiscard]] int order() const noexcept { return static_cast<int>(adj_.size()); }
  [[nodiscard]] int size() const noexcept { return m_; }

  [[nodiscard]] std::span<const Vertex> neighbours(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  [[nodiscard]] bool valid(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Edges (u, v) with u < v in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// Ordering of all vertices; sequence[i] is the vertex of rank i.
struct VertexOrdering {
  std::vector<Vertex> sequence;
  std::vector<int> rank;

  /// Throws PreconditionError unless `sequence` is a permutation of 0..n-1.
  static VertexOrdering from_sequence(std::vector<Vertex> sequence);
  static VertexOrdering identity(int n);

  [[nodiscard]] bool before(Vertex a, Vertex b) const { return rank[a] < rank[b]; }
};

[[nodiscard]] VertexMask mask_of(int n, std::span<const Vertex> set);
[[nodiscard]] VertexSet set_of(const VertexMask& mask);
[[nodiscard]] VertexSet sorted_set(std::vector<Vertex> vertices);

/// Connected components, each sorted, ordered by smallest member.
[[nodiscard]] std::vector<VertexSet> components(const Graph& g);

/// Components of g[within].
[[nodiscard]] std::vector<VertexSet> components_within(const Graph& g, const VertexMask& within);

/// The component of g[within] containing `start` (start must be in within).
[[nodiscard]] VertexSet component_of(const Graph& g, Vertex start, const VertexMask& within);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_connected_subset(const Graph& g, std::span<const Vertex> set);

/// BFS distances from `source` inside g[within]; -1 for unreachable.
[[nodiscard]] std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexMask* within = nullptr);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id or -1
};

/// g[set] relabelled so that local ids follow the sorted order of `set`.
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> set);

struct Contraction {
  Graph graph;
  /// relabel[v] = vertex of the contracted graph that v maps to.
  std::vector<Vertex> relabel;
  /// Id of the vertex that replaced the contracted set.
  Vertex merged = -1;

  /// For each vertex of the contracted graph, the original vertices it stands for.
  [[nodiscard]] std::vector<VertexSet> origins() const;
};

/// Contracts the connected set s to one vertex. Vertices keep their relative
/// order and the merged vertex takes the place of min(s).
[[nodiscard]] Contraction contract_set(const Graph& g, std::span<const Vertex> s);

struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// block_cuts[b] = cut vertices lying in blocks[b].
  std::vector<VertexSet> block_cuts;

  [[nodiscard]] std::vector<int> leaf_blocks() const;
};

/// Biconnected components of a connected graph. A single vertex graph has one
/// block consisting of that vertex.
[[nodiscard]] BlockCutTree block_cut_tree(const Graph& g);

}  // namespace improper
