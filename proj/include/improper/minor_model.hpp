#pragma once

#include <optional>
#include <string>
#include <vector>

#include "improper/graph.hpp"

namespace improper {

enum class PatternKind {
  complete,            // K_t
  complete_join,       // K*_{s,t}: K_s joined to t independent vertices; K_{1,t} is s = 1
  complete_bipartite,  // K_{s,t}
};

struct Pattern {
  PatternKind kind = PatternKind::complete;
  int s = 0;
  int t = 0;

  static Pattern complete(int t) { return {PatternKind::complete, 0, t}; }
  static Pattern complete_join(int s, int t) { return {PatternKind::complete_join, s, t}; }
  static Pattern complete_bipartite(int s, int t) { return {PatternKind::complete_bipartite, s, t}; }

  [[nodiscard]] int order() const { return kind == PatternKind::complete ? t : s + t; }
  /// Pattern vertices are numbered as the branch sets: s-side first.
  [[nodiscard]] Graph graph() const;
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Parses names such as "K5", "K*2,3", "K2,3".
[[nodiscard]] std::optional<Pattern> parse_pattern(const std::string& text);

/// Branch-set certificate for a minor. For bipartite patterns roles[i] is 0
/// for the s-side and 1 for the t-side; for complete patterns roles is empty.
struct MinorModel {
  Pattern pattern;
  std::vector<VertexSet> branch_sets;
  std::vector<int> roles;
};

[[nodiscard]] MinorModel make_model(Pattern pattern, std::vector<VertexSet> branch_sets);

}  // namespace improper
