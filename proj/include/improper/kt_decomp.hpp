#pragma once

#include <optional>
#include <string>

#include "improper/colouring.hpp"
#include "improper/graph.hpp"
#include "improper/partition.hpp"

namespace improper {

/// Width-(t-2) connected partition whose parts are skeletons of their
/// attachment vertices, or a K_t model found on the way. Each part's info
/// records its terminals. Throws PreconditionError if t < 4.
[[nodiscard]] DecompositionOutcome decompose_kt(const Graph& g, int t);

enum class KtColourMode { defect, clustered, paths, independent, treewidth };

[[nodiscard]] std::optional<KtColourMode> parse_kt_mode(const std::string& name);
[[nodiscard]] std::string to_string(KtColourMode mode);

struct KtColourOutcome {
  std::optional<Colouring> colouring;
  std::optional<MinorModel> certificate;
  std::optional<ConnectedPartition> partition;
};

/// Colourings built on decompose_kt:
///   defect, treewidth  part colour only
///   clustered          part colour x leaf-block 2-colouring; colour 2j-1 or 2j
///   paths              part colour x red/blue; colour 2j-1 blue, 2j red
///   independent        as paths with blue paths split alternately;
///                      colour 3j-2 red, 3j-1 and 3j blue
[[nodiscard]] KtColourOutcome colour_kt(const Graph& g, int t, KtColourMode mode);

/// Bandwidth of the concatenated LexBFS layers of g[part] rooted at the
/// smallest terminal (the smallest vertex if no terminals are recorded).
[[nodiscard]] int part_bandwidth(const Graph& g, const VertexSet& part, const VertexSet& terminals);

}  // namespace improper
