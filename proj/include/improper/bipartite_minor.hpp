#pragma once

#include <optional>
#include <string>
#include <variant>

#include "improper/colouring.hpp"
#include "improper/graph.hpp"
#include "improper/lexbfs.hpp"
#include "improper/minor_model.hpp"
#include "improper/partition.hpp"

namespace improper {

/// Width-1 partition whose parts are LexBFS subtrees with at most t-1
/// leaves, or a K*_{2,t} model. Requires t >= 1.
[[nodiscard]] DecompositionOutcome decompose_k2t(const Graph& g, int t);

struct ColourOutcome {
  std::optional<Colouring> colouring;
  std::optional<MinorModel> certificate;
};

/// 2 colours with defect at most 2(t-1), via the width-1 partition.
[[nodiscard]] ColourOutcome colour_k2t_defect(const Graph& g, int t);

/// 3-colouring with clustering at most t-1 in which both ends of the anchor
/// edge are isolated in their colour classes, or a K*_{2,t} model.
/// Without an anchor the edge from the smallest vertex of each component to
/// its smallest neighbour is used. Throws PreconditionError if the anchor is
/// not an edge.
[[nodiscard]] std::variant<std::vector<int>, MinorModel> three_colour_k2t(const Graph& g, int t,
                                                                          std::optional<Edge> anchor = std::nullopt);

/// Outcome of the AB separator search inside one connected vertex set.
struct SeparatorOutcome {
  /// Subtree of `tree` meeting A and B whose vertex set separates them.
  std::optional<LexSubtree> subtree;
  /// K_{1,t} model (branch set 0 is the hub) whose sets all meet A and B.
  std::optional<MinorModel> certificate;
  /// The LexBFS tree the subtree lives in, rooted at min(A).
  LexTree tree;
  /// Number of descent rounds performed.
  int rounds = 0;
};

/// Separator search inside g[within] (all of g when within is null), which
/// must be connected and contain a and b.
[[nodiscard]] SeparatorOutcome separator_ab(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                            int t, const VertexMask* within = nullptr);

/// True iff every A-B path inside g[within] meets `cut` (vertices of A ∩ B
/// must lie in the cut).
[[nodiscard]] bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& cut,
                             const VertexMask* within = nullptr);

/// Width-2 partition whose parts are LexBFS subtrees with at most 2t+1
/// leaves, or a K*_{3,t} model.
[[nodiscard]] DecompositionOutcome decompose_k3t(const Graph& g, int t);

/// Width-s partition whose parts are unions of at most s(t-1) shortest paths
/// (recorded as pieces), or a K*_{s,t} model. Requires 1 <= s <= t.
[[nodiscard]] DecompositionOutcome decompose_kst(const Graph& g, int s, int t);

enum class K3tColourMode { defect, clustered6, layered6 };

[[nodiscard]] std::optional<K3tColourMode> parse_k3t_mode(const std::string& name);
[[nodiscard]] std::string to_string(K3tColourMode mode);

/// defect: 3 colours, defect <= 4t+2. clustered6: 6 colours, clustering
/// <= 2t+1. layered6: per BFS layer 3-colouring, palettes alternating by
/// layer parity, clustering <= t-1.
[[nodiscard]] ColourOutcome colour_k3t(const Graph& g, int t, K3tColourMode mode);

}  // namespace improper
