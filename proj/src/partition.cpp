#include "improper/partition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace improper {

std::vector<int> ConnectedPartition::part_of(int n) const {
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) out[v] = static_cast<int>(i);
  }
  return out;
}

int ConnectedPartition::max_leaves() const {
  std::size_t p = 1;
  for (const auto& part : info) p = std::max(p, part.leaves.size());
  return static_cast<int>(p);
}

std::string to_string(PartitionStatus s) {
  switch (s) {
    case PartitionStatus::ok:
      return "ok";
    case PartitionStatus::overlap:
      return "overlap";
    case PartitionStatus::not_covering:
      return "not_covering";
    case PartitionStatus::disconnected_part:
      return "disconnected_part";
    case PartitionStatus::width_exceeded:
      return "width_exceeded";
  }
  return "unknown";
}

PartitionReport validate_partition(const Graph& g, const ConnectedPartition& p) {
  const int n = g.order();
  PartitionReport report;
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) {
      report.status = PartitionStatus::disconnected_part;
      report.detail = "part " + std::to_string(i) + " is empty";
      return report;
    }
    for (Vertex v : p.parts[i]) {
      if (!g.valid(v)) {
        report.status = PartitionStatus::not_covering;
        report.detail = "vertex " + std::to_string(v) + " out of range";
        return report;
      }
      if (owner[v] != -1) {
        report.status = PartitionStatus::overlap;
        report.detail = "vertex " + std::to_string(v) + " in parts " + std::to_string(owner[v]) + " and " +
                        std::to_string(i);
        return report;
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -1) {
      report.status = PartitionStatus::not_covering;
      report.detail = "vertex " + std::to_string(v) + " is in no part";
      return report;
    }
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (!is_connected_subset(g, p.parts[i])) {
      report.status = PartitionStatus::disconnected_part;
      report.detail = "part " + std::to_string(i) + " is disconnected";
      return report;
    }
  }

  VertexMask rest(n, 1);
  for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i]) rest[v] = 0;
    for (const auto& comp : components_within(g, rest)) {
      std::set<int> touching;
      for (Vertex v : comp) {
        for (Vertex w : g.neighbours(v)) {
          if (!rest[w]) touching.insert(owner[w]);
        }
      }
      report.measured_width = std::max(report.measured_width, static_cast<int>(touching.size()));
    }
  }
  if (report.measured_width > p.width) {
    report.status = PartitionStatus::width_exceeded;
    report.detail = "width " + std::to_string(report.measured_width) + " exceeds declared " + std::to_string(p.width);
  }
  return report;
}

Graph quotient(const Graph& g, const ConnectedPartition& p) {
  auto owner = p.part_of(g.order());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (owner[u] != owner[v]) edges.emplace_back(owner[u], owner[v]);
  }
  return Graph::simplified(static_cast<int>(p.parts.size()), edges);
}

std::vector<int> greedy_part_colouring(const Graph& q, int k) {
  std::vector<int> colour(q.order(), 0);
  for (Vertex i = 0; i < q.order(); ++i) {
    std::vector<char> taken(q.order() + 2, 0);
    int earlier = 0;
    for (Vertex j : q.neighbours(i)) {
      if (j < i) {
        ++earlier;
        taken[colour[j]] = 1;
      }
    }
    if (earlier > k) {
      throw PreconditionError("greedy_part_colouring: part " + std::to_string(i) + " has " + std::to_string(earlier) +
                              " earlier neighbours, more than " + std::to_string(k));
    }
    int c = 1;
    while (taken[c]) ++c;
    colour[i] = c;
  }
  return colour;
}

namespace {

std::vector<int> vertex_part_colours(const Graph& g, const ConnectedPartition& p) {
  auto part_colour = greedy_part_colouring(quotient(g, p), p.width);
  auto owner = p.part_of(g.order());
  std::vector<int> colour(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colour[v] = part_colour[owner[v]];
  return colour;
}

void require_trees(const ConnectedPartition& p, bool lex) {
  if (p.info.size() != p.parts.size()) throw PreconditionError("partition carries no per-part metadata");
  for (const auto& info : p.info) {
    if (info.tree_kind == TreeKind::none || info.root == -1) throw PreconditionError("part without subtree metadata");
    if (lex && info.tree_kind != TreeKind::lexbfs) throw PreconditionError("part is not a LexBFS subtree");
  }
}

}  // namespace

int partition_colouring_bound(const ConnectedPartition& p, PartitionColouringMode mode) {
  const int leaves = p.max_leaves();
  switch (mode) {
    case PartitionColouringMode::bfs_defect:
      return 3 * leaves - 1;
    case PartitionColouringMode::lex_defect:
      return 2 * leaves;
    case PartitionColouringMode::clustered:
      return leaves;
  }
  return 0;
}

Colouring partition_colourings(const Graph& g, const ConnectedPartition& p, PartitionColouringMode mode) {
  require_trees(p, mode == PartitionColouringMode::lex_defect);
  auto colour = vertex_part_colours(g, p);
  if (mode == PartitionColouringMode::clustered) {
    std::vector<int> depth(g.order(), -1);
    for (const auto& info : p.info) {
      std::map<Vertex, Vertex> parent;
      for (auto [child, up] : info.tree_edges) parent[child] = up;
      depth[info.root] = 0;
      // Resolve depths by walking up; parts are small.
      for (auto [child, up] : info.tree_edges) {
        int d = 0;
        Vertex u = child;
        while (u != info.root) {
          u = parent.at(u);
          ++d;
        }
        depth[child] = d;
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (depth[v] < 0) throw PreconditionError("vertex " + std::to_string(v) + " outside every part tree");
      colour[v] = 2 * (colour[v] - 1) + (depth[v] % 2) + 1;
    }
  }
  return make_colouring(g, std::move(colour));
}

VertexOrdering partition_ordering(const Graph& g, const ConnectedPartition& p) {
  if (p.info.size() != p.parts.size()) throw PreconditionError("partition_ordering: no path metadata");
  std::vector<Vertex> sequence;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    std::vector<Vertex> here;
    for (const auto& piece : p.info[i].pieces) here.insert(here.end(), piece.begin(), piece.end());
    if (sorted_set(here) != p.parts[i] || here.size() != p.parts[i].size()) {
      throw PreconditionError("partition_ordering: pieces of part " + std::to_string(i) + " do not cover it exactly");
    }
    sequence.insert(sequence.end(), here.begin(), here.end());
  }
  if (static_cast<int>(sequence.size()) != g.order()) throw PreconditionError("partition_ordering: not a cover");
  return VertexOrdering::from_sequence(std::move(sequence));
}

std::vector<std::vector<Vertex>> subtree_pieces(Vertex root, const std::vector<Edge>& tree_edges,
                                                const VertexSet& leaves) {
  std::map<Vertex, Vertex> parent;
  for (auto [child, up] : tree_edges) parent[child] = up;
  std::set<Vertex> covered;
  std::vector<std::vector<Vertex>> pieces;
  if (leaves.empty()) {
    pieces.push_back({root});
    return pieces;
  }
  for (Vertex leaf : leaves) {
    std::vector<Vertex> path;
    Vertex u = leaf;
    while (!covered.count(u)) {
      path.push_back(u);
      covered.insert(u);
      if (u == root) break;
      u = parent.at(u);
    }
    std::reverse(path.begin(), path.end());
    if (!path.empty()) pieces.push_back(std::move(path));
  }
  return pieces;
}

}  // namespace improper
