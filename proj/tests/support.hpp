#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "improper/generators.hpp"
#include "improper/graph.hpp"
#include "improper/immersion.hpp"

namespace improper::testing {

inline Graph triangulation(int n, std::uint64_t seed) {
  Rng rng(seed);
  return planar_triangulation(n, rng);
}

inline Graph outerplanar(int n, std::uint64_t seed) {
  Rng rng(seed);
  return maximal_outerplanar(n, rng);
}

inline Graph connected(int n, int extra, std::uint64_t seed) {
  Rng rng(seed);
  return random_connected(n, extra, rng);
}

inline Graph ktree(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  return random_ktree(n, k, rng);
}

/// Drops each edge with probability 1/3; the result may be disconnected.
inline Graph thinned(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> keep;
  for (auto e : g.edges()) {
    if (rng.below(3) != 0) keep.push_back(e);
  }
  return Graph(g.order(), keep);
}

/// |N(v) ∩ set| computed by scanning the set.
inline int neighbours_in(const Graph& g, Vertex v, const VertexSet& set) {
  int count = 0;
  for (Vertex w : set) count += g.has_edge(v, w) ? 1 : 0;
  return count;
}

/// Random sample of k distinct vertices, sorted.
inline VertexSet sample(int n, int k, Rng& rng) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  return sorted_set(all);
}

/// Random spanning tree plus random extra edges, keeping every tree-edge cut
/// at most k. Returns the graph and its cut tree.
inline std::pair<Graph, CutTree> cut_tree_instance(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<int> load(n, 1);  // cut size of the edge to the parent
  std::vector<Edge> edges;
  CutTree ct;
  ct.k = k;
  for (Vertex v = 1; v < n; ++v) {
    parent[v] = rng.below(v);
    depth[v] = depth[parent[v]] + 1;
    edges.emplace_back(parent[v], v);
    ct.tree_edges.emplace_back(v, parent[v]);
  }
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) adjacent[u][v] = adjacent[v][u] = 1;
  auto tree_path = [&](Vertex u, Vertex v) {
    std::vector<Vertex> below;  // vertices whose parent edge lies on the path
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      below.push_back(u);
      u = parent[u];
    }
    return below;
  };
  for (int attempt = 0; attempt < 4 * n; ++attempt) {
    Vertex u = rng.below(n), v = rng.below(n);
    if (u == v || adjacent[u][v]) continue;
    auto path = tree_path(u, v);
    if (std::any_of(path.begin(), path.end(), [&](Vertex x) { return load[x] >= k; })) continue;
    for (Vertex x : path) ++load[x];
    adjacent[u][v] = adjacent[v][u] = 1;
    edges.emplace_back(u, v);
  }
  return {Graph(n, edges), ct};
}

/// Random tree on `nodes` nodes with each vertex of g dropped in a random bag.
inline TPartition random_tpartition(const Graph& g, int nodes, std::uint64_t seed) {
  Rng rng(seed);
  TPartition tp;
  tp.nodes = nodes;
  tp.bags.assign(nodes, {});
  for (int x = 1; x < nodes; ++x) tp.tree_edges.emplace_back(rng.below(x), x);
  for (Vertex v = 0; v < g.order(); ++v) tp.bags[rng.below(nodes)].push_back(v);
  return tp;
}

}  // namespace improper::testing
