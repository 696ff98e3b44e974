#include "improper/minor_model.hpp"

#include <regex>

namespace improper {

Graph Pattern::graph() const {
  std::vector<Edge> edges;
  if (kind == PatternKind::complete) {
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) edges.emplace_back(i, j);
    }
    return Graph(t, edges);
  }
  if (kind == PatternKind::complete_join) {
    for (int i = 0; i < s; ++i) {
      for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    }
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  }
  return Graph(s + t, edges);
}

std::string Pattern::name() const {
  switch (kind) {
    case PatternKind::complete:
      return "K" + std::to_string(t);
    case PatternKind::complete_join:
      return "K*" + std::to_string(s) + "," + std::to_string(t);
    case PatternKind::complete_bipartite:
      return "K" + std::to_string(s) + "," + std::to_string(t);
  }
  return {};
}

std::optional<Pattern> parse_pattern(const std::string& text) {
  static const std::regex complete(R"(K(\d+))");
  static const std::regex join(R"(K\*(\d+),(\d+))");
  static const std::regex bipartite(R"(K(\d+),(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, complete)) return Pattern::complete(std::stoi(m[1]));
  if (std::regex_match(text, m, join)) return Pattern::complete_join(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(text, m, bipartite)) return Pattern::complete_bipartite(std::stoi(m[1]), std::stoi(m[2]));
  return std::nullopt;
}

MinorModel make_model(Pattern pattern, std::vector<VertexSet> branch_sets) {
  MinorModel m{pattern, std::move(branch_sets), {}};
  for (auto& set : m.branch_sets) set = sorted_set(std::move(set));
  if (pattern.kind != PatternKind::complete) {
    for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
      m.roles.push_back(static_cast<int>(i) < pattern.s ? 0 : 1);
    }
  }
  return m;
}

}  // namespace improper
