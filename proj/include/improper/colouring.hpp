#pragma once

#include <vector>

#include "improper/graph.hpp"

namespace improper {

/// Vertex colouring with its quality measures. Colours are positive; a
/// colour of 0 marks a vertex that is not coloured and is ignored by the
/// metrics (used for colourings of a subgraph given in host ids).
struct Colouring {
  std::vector<int> colour;
  int num_colours = 0;  // distinct colours used
  int defect = 0;       // max degree inside a monochromatic subgraph
  int clustering = 0;   // max order of a monochromatic component
};

[[nodiscard]] Colouring make_colouring(const Graph& g, std::vector<int> colour);

/// Relabels colours to 1..k in order of first appearance by vertex id.
[[nodiscard]] std::vector<int> compact_colours(const std::vector<int>& colour);

}  // namespace improper
