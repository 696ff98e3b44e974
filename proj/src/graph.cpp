#include "improper/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace improper {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge " + edge_text(u, v) + " has an out-of-range endpoint");
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      Vertex self = static_cast<Vertex>(&list - adj_.data());
      throw PreconditionError("duplicate edge " + edge_text(self, *dup));
    }
  }
  m_ = static_cast<int>(edges.size());
}

Graph Graph::simplified(int n, std::span<const Edge> edges) {
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    clean.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  return Graph(n, clean);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexOrdering VertexOrdering::from_sequence(std::vector<Vertex> sequence) {
  const int n = static_cast<int>(sequence.size());
  std::vector<int> rank(sequence.size(), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = sequence[i];
    if (v < 0 || v >= n || rank[v] != -1) throw PreconditionError("ordering is not a permutation");
    rank[v] = i;
  }
  return VertexOrdering{std::move(sequence), std::move(rank)};
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

VertexMask mask_of(int n, std::span<const Vertex> set) {
  VertexMask mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

VertexSet set_of(const VertexMask& mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet sorted_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet component_of(const Graph& g, Vertex start, const VertexMask& within) {
  VertexMask seen(static_cast<std::size_t>(g.order()), 0);
  VertexSet out{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex w : g.neighbours(out[head])) {
      if (within[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexMask& within) {
  std::vector<VertexSet> out;
  VertexMask done(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!within[v] || done[v]) continue;
    out.push_back(component_of(g, v, within));
    for (Vertex u : out.back()) done[u] = 1;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, VertexMask(static_cast<std::size_t>(g.order()), 1));
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool is_connected_subset(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return false;
  auto mask = mask_of(g.order(), set);
  return component_of(g, set.front(), mask).size() == sorted_set({set.begin(), set.end()}).size();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, const VertexMask* within) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] != -1 || (within && !(*within)[w])) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> set) {
  InducedSubgraph out;
  out.to_parent = sorted_set({set.begin(), set.end()});
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbours(out.to_parent[i])) {
      Vertex j = out.from_parent[w];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

std::vector<VertexSet> Contraction::origins() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(graph.order()));
  for (std::size_t v = 0; v < relabel.size(); ++v) out[relabel[v]].push_back(static_cast<Vertex>(v));
  return out;
}

Contraction contract_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw PreconditionError("contract_set: empty set");
  VertexSet set = sorted_set({s.begin(), s.end()});
  for (Vertex v : set) {
    if (!g.valid(v)) throw PreconditionError("contract_set: vertex out of range");
  }
  if (!is_connected_subset(g, set)) throw PreconditionError("contract_set: set does not induce a connected subgraph");

  auto in_set = mask_of(g.order(), set);
  Contraction out;
  out.relabel.assign(static_cast<std::size_t>(g.order()), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_set[v]) {
      out.relabel[v] = next++;
    } else if (v == set.front()) {
      out.merged = next;
      out.relabel[v] = next++;
    }
  }
  for (Vertex v : set) out.relabel[v] = out.merged;

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(out.relabel[u], out.relabel[v]);
  out.graph = Graph::simplified(next, edges);
  return out;
}

std::vector<int> BlockCutTree::leaf_blocks() const {
  std::vector<int> out;
  if (blocks.size() < 2) return out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (block_cuts[b].size() == 1) out.push_back(static_cast<int>(b));
  }
  return out;
}

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("block_cut_tree: empty graph");
  if (!is_connected(g)) throw PreconditionError("block_cut_tree: graph is disconnected");

  BlockCutTree out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.block_cuts.emplace_back();
    return out;
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> edge_stack;
  VertexMask is_cut(n, 0);
  int timer = 0;

  // Iterative Hopcroft-Tarjan from vertex 0.
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = g.neighbours(v);
    if (next_child[v] < nbrs.size()) {
      Vertex w = nbrs[next_child[v]++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(v, w);
        stack.push_back(w);
        if (v == 0) ++root_children;
      } else if (w != parent[v] && disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        edge_stack.emplace_back(v, w);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[v];
    if (p == -1) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != 0) is_cut[p] = 1;
      std::vector<Vertex> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{p, v}) break;
      }
      out.blocks.push_back(sorted_set(std::move(block)));
    }
  }
  if (root_children > 1) is_cut[0] = 1;

  out.cut_vertices = set_of(is_cut);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (const auto& block : out.blocks) {
    VertexSet cuts;
    for (Vertex v : block) {
      if (is_cut[v]) cuts.push_back(v);
    }
    out.block_cuts.push_back(std::move(cuts));
  }
  return out;
}

}  // namespace improper
