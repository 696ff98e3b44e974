#pragma once

#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Induced connected subgraph g[vertices] that is inclusion-minimal among
/// connected induced subgraphs containing the terminals.
struct Skeleton {
  VertexSet vertices;
  VertexSet terminals;

  [[nodiscard]] int k() const { return static_cast<int>(terminals.size()); }
};

/// Prunes `within` down to a minimal connected set containing a. Candidates
/// are tried in descending id order, repeating until nothing more can go.
/// Throws PreconditionError if a is empty, a is not inside within, or the
/// terminals are not connected inside g[within].
[[nodiscard]] Skeleton minimal_connected_containing(const Graph& g, std::span<const Vertex> a,
                                                    std::span<const Vertex> within);

/// LexBFS tree of g[within] rooted at min(a), the subtree spanned by the
/// root paths to a, then pruning inside that subtree. `within` defaults to
/// all of g.
[[nodiscard]] Skeleton build_skeleton(const Graph& g, std::span<const Vertex> a,
                                      const VertexMask* within = nullptr);

/// 2-colouring of g[h] with clustering at most ceil(k/2), by peeling leaf
/// blocks. Returned in host ids with 0 outside h. Requires k >= 2.
[[nodiscard]] std::vector<int> cluster2colour(const Graph& g, const Skeleton& h);

inline constexpr int kBlue = 1;
inline constexpr int kRed = 2;

/// Colouring of g[h] with at most k-2 red vertices whose blue part is at
/// most k-1 disjoint paths. Terminals are removed largest id first.
/// Returned in host ids with 0 outside h. Requires k >= 2.
[[nodiscard]] std::vector<int> redblue(const Graph& g, const Skeleton& h);

}  // namespace improper
