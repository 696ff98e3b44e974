#include "improper/lexbfs.hpp"

#include <algorithm>
#include <list>

namespace improper {

std::vector<Vertex> LexTree::visit_order() const {
  std::vector<Vertex> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

VertexSet LexTree::vertices() const { return sorted_set(visit_order()); }

std::vector<Vertex> LexTree::root_path(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex u = v; u != -1; u = parent[u]) path.push_back(u);
  return path;
}

VertexSet LexTree::leaves() const {
  std::vector<int> children(parent.size(), 0);
  for (Vertex v : visit_order()) {
    if (parent[v] != -1) ++children[parent[v]];
  }
  VertexSet out;
  for (Vertex v : visit_order()) {
    if (v != root && children[v] == 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LexTree lexbfs_tree(const Graph& g, Vertex root, const VertexMask* within) {
  const int n = g.order();
  if (!g.valid(root)) throw PreconditionError("lexbfs_tree: invalid root");
  if (within && !(*within)[root]) throw PreconditionError("lexbfs_tree: root outside the vertex set");
  auto inside = [&](Vertex v) { return !within || (*within)[v]; };

  // Classes are kept sorted by id so the head of the first class is the
  // smallest id among the lexicographically largest labels.
  std::list<std::vector<Vertex>> classes;
  classes.push_back({root});
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root && inside(v)) rest.push_back(v);
  }
  if (!rest.empty()) classes.push_back(std::move(rest));

  LexTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.layer_index.assign(n, -1);
  t.position.assign(n, -1);
  VertexMask visited(n, 0), is_nbr(n, 0);

  while (!classes.empty()) {
    auto& head = classes.front();
    Vertex v = head.front();
    head.erase(head.begin());
    if (head.empty()) classes.pop_front();

    int layer = 0;
    if (v != root) {
      Vertex best = -1;
      for (Vertex w : g.neighbours(v)) {
        if (visited[w] && (best == -1 || t.layer_index[w] < t.layer_index[best] ||
                           (t.layer_index[w] == t.layer_index[best] && t.position[w] < t.position[best]))) {
          best = w;
        }
      }
      if (best == -1) throw PreconditionError("lexbfs_tree: graph is disconnected");
      t.parent[v] = best;
      layer = t.layer_index[best] + 1;
    }
    visited[v] = 1;
    if (static_cast<int>(t.layers.size()) <= layer) t.layers.resize(layer + 1);
    t.layer_index[v] = layer;
    t.position[v] = static_cast<int>(t.layers[layer].size());
    t.layers[layer].push_back(v);

    for (Vertex w : g.neighbours(v)) is_nbr[w] = 1;
    for (auto it = classes.begin(); it != classes.end(); ++it) {
      std::vector<Vertex> hit, miss;
      for (Vertex u : *it) (is_nbr[u] ? hit : miss).push_back(u);
      if (hit.empty() || miss.empty()) continue;
      *it = std::move(miss);
      classes.insert(it, std::move(hit));
    }
    for (Vertex w : g.neighbours(v)) is_nbr[w] = 0;
  }
  return t;
}

bool check_lex_rules(const Graph& g, const LexTree& t, const VertexMask* within) {
  const int n = g.order();
  if (!g.valid(t.root)) return false;
  if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.layer_index.size()) != n ||
      static_cast<int>(t.position.size()) != n) {
    return false;
  }
  auto inside = [&](Vertex v) { return !within || (*within)[v]; };

  // Layers must agree with layer_index and position.
  std::vector<int> seen(n, 0);
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    for (std::size_t j = 0; j < t.layers[i].size(); ++j) {
      Vertex v = t.layers[i][j];
      if (!g.valid(v) || seen[v]++ || t.layer_index[v] != static_cast<int>(i) ||
          t.position[v] != static_cast<int>(j)) {
        return false;
      }
    }
  }

  // BFS rule.
  auto dist = bfs_distances(g, t.root, within);
  for (Vertex v = 0; v < n; ++v) {
    if (!inside(v)) {
      if (seen[v]) return false;
      continue;
    }
    if (!seen[v] || dist[v] != t.layer_index[v]) return false;
    if (v == t.root) {
      if (t.parent[v] != -1) return false;
      continue;
    }
    Vertex w = t.parent[v];
    if (!g.valid(w) || !g.has_edge(v, w) || t.layer_index[w] != t.layer_index[v] - 1) return false;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!inside(v) || v == t.root) continue;
    Vertex w = t.parent[v];
    // Priority rule.
    for (Vertex x : g.neighbours(v)) {
      if (inside(x) && t.layer_index[x] == t.layer_index[w] && t.position[x] < t.position[w]) return false;
    }
    // Non-crossing rule: tree edges xy with x before v and y after w.
    for (Vertex x : t.layers[t.layer_index[v]]) {
      if (t.position[x] >= t.position[v]) break;
      if (t.position[t.parent[x]] > t.position[w]) return false;
    }
  }
  return true;
}

LexSubtree subtree_to(const LexTree& t, std::span<const Vertex> a) {
  if (a.empty()) throw PreconditionError("subtree_to: empty target set");
  const std::size_t n = t.parent.size();
  LexSubtree s;
  s.root = t.root;
  s.parent.assign(n, -1);
  s.depth.assign(n, -1);
  for (Vertex x : a) {
    if (x < 0 || x >= static_cast<Vertex>(n) || !t.contains(x)) {
      throw PreconditionError("subtree_to: target outside the tree");
    }
    for (Vertex u = x; u != -1 && s.depth[u] < 0; u = t.parent[u]) {
      s.depth[u] = t.layer_index[u];
      s.parent[u] = t.parent[u];
    }
  }
  std::vector<int> children(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (s.depth[v] < 0) continue;
    s.vertices.push_back(static_cast<Vertex>(v));
    if (s.parent[v] != -1) ++children[s.parent[v]];
  }
  for (Vertex v : s.vertices) {
    if (v != s.root && children[v] == 0) s.leaves.push_back(v);
  }
  return s;
}

int neighbour_count_in(const Graph& g, const LexSubtree& s, Vertex v) {
  int count = 0;
  for (Vertex w : g.neighbours(v)) count += s.contains(w) ? 1 : 0;
  return count;
}

VertexOrdering bandwidth_ordering(const Graph& g, const LexTree& t) {
  auto order = t.visit_order();
  if (static_cast<int>(order.size()) != g.order()) {
    throw PreconditionError("bandwidth_ordering: tree does not span the graph");
  }
  return VertexOrdering::from_sequence(std::move(order));
}

std::vector<VertexSet> layering(const LexTree& t) {
  std::vector<VertexSet> out;
  for (const auto& layer : t.layers) out.push_back(sorted_set(layer));
  return out;
}

}  // namespace improper
