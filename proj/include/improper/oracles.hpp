#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/graph.hpp"
#include "improper/minor_model.hpp"

namespace improper::oracle {

// Brute-force checkers. None of them calls into the constructive modules.

struct ModelCheck {
  bool ok = true;
  std::string detail;
};

/// Disjoint, non-empty, connected branch sets with every pattern edge
/// realised by a g-edge between the corresponding sets.
[[nodiscard]] ModelCheck validate_minor_model(const Graph& g, const MinorModel& m);

inline constexpr int kMinorCap = 14;

/// A model of the pattern in g, or nullopt if there is none. Throws
/// CapExceeded when n > 14.
[[nodiscard]] std::optional<MinorModel> has_minor(const Graph& g, const Pattern& pattern);

struct ColouringMetrics {
  int num_colours = 0;
  int defect = 0;
  int clustering = 0;
};

/// Metrics recomputed with union-find; colour 0 marks an ignored vertex.
[[nodiscard]] ColouringMetrics validate_colouring(const Graph& g, const std::vector<int>& colour);

struct ColourClass {
  int colour = 0;
  int max_component = 0;
  bool path_forest = true;  // every monochromatic component is a path
  bool independent = true;  // no monochromatic edge
};

[[nodiscard]] std::vector<ColourClass> colour_class_profile(const Graph& g, const std::vector<int>& colour);

struct Chordality {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<Vertex> peo;
  /// Chordless cycle of length at least 4 otherwise.
  std::vector<Vertex> witness;
  /// Clique number, read off the elimination ordering (chordal only).
  int max_clique = 0;
};

[[nodiscard]] Chordality is_chordal(const Graph& g);

inline constexpr int kTreewidthCap = 12;

/// Exact treewidth by dynamic programming over elimination prefixes.
/// Throws CapExceeded when n > 12.
[[nodiscard]] int exact_treewidth(const Graph& g);

[[nodiscard]] int bandwidth_of_ordering(const Graph& g, const VertexOrdering& ord);

/// True iff some k-colouring has every monochromatic component of order at
/// most c. Throws CapExceeded when k^n > 2^24.
[[nodiscard]] bool exhaustive_cluster_colourable(const Graph& g, int k, int c);

[[nodiscard]] int degeneracy(const Graph& g);

inline constexpr int kPathEnumerationCap = 10;

/// S_r(v) and W_r(v) by listing every path of length at most r from v.
/// Throws CapExceeded when n > 10.
[[nodiscard]] VertexSet sreach_by_paths(const Graph& g, const VertexOrdering& ord, Vertex v, int r);
[[nodiscard]] VertexSet wreach_by_paths(const Graph& g, const VertexOrdering& ord, Vertex v, int r);

}  // namespace improper::oracle
