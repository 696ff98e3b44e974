#include "improper/colnums.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace improper {

namespace {

void require_ordering(const Graph& g, const VertexOrdering& ord, int r) {
  if (static_cast<int>(ord.rank.size()) != g.order()) throw PreconditionError("ordering size does not match graph");
  if (r < 1) throw PreconditionError("r must be at least 1");
}

/// BFS from s inside `allowed`, returning vertices at distance <= depth.
std::vector<int> bounded_bfs(const Graph& g, Vertex s, int depth, const std::vector<char>& allowed) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == depth) continue;
    for (Vertex w : g.neighbours(u)) {
      if (dist[w] < 0 && allowed[w]) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// |S_r(v)| when `later` marks the vertices after v.
int strong_size(const Graph& g, Vertex v, int r, std::vector<char> later) {
  later[v] = 1;
  auto dist = bounded_bfs(g, v, r - 1, later);
  std::vector<char> hit(g.order(), 0);
  int count = 1;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] < 0) continue;
    for (Vertex x : g.neighbours(u)) {
      if (!later[x] && x != v && !hit[x]) {
        hit[x] = 1;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

VertexSet sreach(const Graph& g, const VertexOrdering& ord, Vertex v, int r) {
  require_ordering(g, ord, r);
  std::vector<char> allowed(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) allowed[u] = ord.rank[u] >= ord.rank[v];
  auto dist = bounded_bfs(g, v, r - 1, allowed);
  VertexSet out{v};
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] < 0) continue;
    for (Vertex x : g.neighbours(u)) {
      if (ord.rank[x] < ord.rank[v]) out.push_back(x);
    }
  }
  return sorted_set(std::move(out));
}

VertexSet wreach(const Graph& g, const VertexOrdering& ord, Vertex v, int r) {
  require_ordering(g, ord, r);
  VertexSet out{v};
  std::vector<char> allowed(g.order(), 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (ord.rank[x] >= ord.rank[v]) continue;
    for (Vertex u = 0; u < g.order(); ++u) allowed[u] = ord.rank[u] >= ord.rank[x];
    auto dist = bounded_bfs(g, x, r, allowed);
    if (dist[v] >= 0) out.push_back(x);
  }
  return sorted_set(std::move(out));
}

int scol(const Graph& g, const VertexOrdering& ord, int r) {
  require_ordering(g, ord, r);
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, static_cast<int>(sreach(g, ord, v, r).size()));
  return best;
}

int wcol(const Graph& g, const VertexOrdering& ord, int r) {
  require_ordering(g, ord, r);
  // Each x is counted once for every later vertex it reaches.
  std::vector<int> size(g.order(), 1);
  std::vector<char> allowed(g.order(), 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex u = 0; u < g.order(); ++u) allowed[u] = ord.rank[u] >= ord.rank[x];
    auto dist = bounded_bfs(g, x, r, allowed);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v != x && dist[v] >= 0) ++size[v];
    }
  }
  return g.order() == 0 ? 0 : *std::max_element(size.begin(), size.end());
}

ExactColouringNumber exact_scol(const Graph& g, int r) {
  const int n = g.order();
  if (n > kExactColnumCap) throw CapExceeded("exact_scol: n = " + std::to_string(n) + " exceeds cap 9");
  if (r < 1) throw PreconditionError("r must be at least 1");
  // best[U]: optimum over orderings of the suffix U, first[U] its first vertex.
  const unsigned full = (1u << n) - 1;
  std::vector<int> best(full + 1, 0), first(full + 1, -1);
  for (unsigned u = 1; u <= full; ++u) {
    best[u] = n + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!(u >> v & 1)) continue;
      const unsigned rest = u & ~(1u << v);
      std::vector<char> later(n, 0);
      for (Vertex w = 0; w < n; ++w) later[w] = rest >> w & 1;
      int value = std::max(strong_size(g, v, r, later), best[rest]);
      if (value < best[u]) {
        best[u] = value;
        first[u] = v;
      }
    }
  }
  std::vector<Vertex> seq;
  for (unsigned u = full; u; u &= ~(1u << first[u])) seq.push_back(first[u]);
  return {best[full], VertexOrdering::from_sequence(std::move(seq))};
}

namespace {

struct WeakSearch {
  const Graph& g;
  int r;
  int best;
  std::vector<Vertex> best_seq;
  std::vector<Vertex> seq;
  std::vector<char> placed;
  std::vector<int> count;

  void run() {
    const int n = g.order();
    if (static_cast<int>(seq.size()) == n) {
      int value = n == 0 ? 0 : *std::max_element(count.begin(), count.end());
      if (value < best) {
        best = value;
        best_seq = seq;
      }
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (placed[x]) continue;
      std::vector<char> allowed(n, 0);
      for (Vertex u = 0; u < n; ++u) allowed[u] = !placed[u];
      auto dist = bounded_bfs(g, x, r, allowed);
      bool ok = true;
      for (Vertex v = 0; v < n; ++v) {
        if (v != x && dist[v] >= 0) ok = ok && count[v] + 1 < best;
      }
      if (!ok) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v != x && dist[v] >= 0) ++count[v];
      }
      placed[x] = 1;
      seq.push_back(x);
      run();
      seq.pop_back();
      placed[x] = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (v != x && dist[v] >= 0) --count[v];
      }
    }
  }
};

}  // namespace

ExactColouringNumber exact_wcol(const Graph& g, int r) {
  const int n = g.order();
  if (n > kExactColnumCap) throw CapExceeded("exact_wcol: n = " + std::to_string(n) + " exceeds cap 9");
  if (r < 1) throw PreconditionError("r must be at least 1");
  auto start = degeneracy_ordering(g);
  WeakSearch search{g, r, wcol(g, start, r) + 1, {}, {}, std::vector<char>(n, 0), std::vector<int>(n, 1)};
  search.run();
  if (search.best_seq.empty() && n > 0) return {search.best - 1, start};
  return {search.best, VertexOrdering::from_sequence(search.best_seq)};
}

VertexOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    }
    gone[pick] = 1;
    removal.push_back(pick);
    for (Vertex w : g.neighbours(pick)) --deg[w];
  }
  std::reverse(removal.begin(), removal.end());
  return VertexOrdering::from_sequence(std::move(removal));
}

std::string to_string(LayeredTDStatus s) {
  switch (s) {
    case LayeredTDStatus::ok:
      return "ok";
    case LayeredTDStatus::not_tree:
      return "not_tree";
    case LayeredTDStatus::coverage:
      return "coverage";
    case LayeredTDStatus::subtree:
      return "subtree";
    case LayeredTDStatus::layering:
      return "layering";
    case LayeredTDStatus::width:
      return "width";
  }
  return "unknown";
}

namespace {

/// Depth of every node from node 0, or empty if the edges are not a tree.
std::vector<int> tree_depths(const LayeredTD& td) {
  const int k = td.nodes;
  if (k < 1 || static_cast<int>(td.tree_edges.size()) != k - 1) return {};
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return {};
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> depth(k, -1);
  depth[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (depth[y] < 0) {
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (std::count(depth.begin(), depth.end(), -1) > 0) return {};
  return depth;
}

}  // namespace

LayeredTDReport validate_layered_td(const Graph& g, const LayeredTD& td) {
  const int n = g.order();
  LayeredTDReport rep;
  auto fail = [&](LayeredTDStatus s, std::string detail) {
    rep.status = s;
    rep.detail = std::move(detail);
    return rep;
  };
  auto depth = tree_depths(td);
  if (depth.empty() || static_cast<int>(td.bags.size()) != td.nodes) {
    return fail(LayeredTDStatus::not_tree, "tree edges do not form a tree on the bag nodes");
  }
  std::vector<std::vector<int>> holders(n);
  for (int x = 0; x < td.nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (!g.valid(v)) return fail(LayeredTDStatus::coverage, "bag " + std::to_string(x) + " holds an invalid vertex");
      holders[v].push_back(x);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holders[v].empty()) return fail(LayeredTDStatus::coverage, "vertex " + std::to_string(v) + " is in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : holders[u]) covered = covered || std::binary_search(td.bags[x].begin(), td.bags[x].end(), v);
    if (!covered) {
      return fail(LayeredTDStatus::coverage, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
  }
  // Nodes holding v are connected iff they span exactly |holders|-1 tree edges.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> has(td.nodes, 0);
    for (int x : holders[v]) has[x] = 1;
    int inside = 0;
    for (auto [a, b] : td.tree_edges) inside += has[a] && has[b];
    if (inside != static_cast<int>(holders[v].size()) - 1) {
      return fail(LayeredTDStatus::subtree, "bags containing " + std::to_string(v) + " are not connected");
    }
  }
  std::vector<int> layer(n, -1);
  for (std::size_t i = 0; i < td.layers.size(); ++i) {
    for (Vertex v : td.layers[i]) {
      if (!g.valid(v) || layer[v] != -1) return fail(LayeredTDStatus::layering, "layers do not partition the vertices");
      layer[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (layer[v] < 0) return fail(LayeredTDStatus::layering, "vertex " + std::to_string(v) + " is in no layer");
  }
  for (auto [u, v] : g.edges()) {
    if (std::abs(layer[u] - layer[v]) > 1) {
      return fail(LayeredTDStatus::layering, "edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a layer");
    }
  }
  for (int x = 0; x < td.nodes; ++x) {
    std::vector<int> per(td.layers.size(), 0);
    for (Vertex v : td.bags[x]) rep.measured_width = std::max(rep.measured_width, ++per[layer[v]]);
  }
  if (rep.measured_width > td.layered_width) {
    return fail(LayeredTDStatus::width, "a bag meets a layer in " + std::to_string(rep.measured_width) +
                                            " vertices, more than " + std::to_string(td.layered_width));
  }
  return rep;
}

VertexOrdering layered_ordering(const Graph& g, const LayeredTD& td) {
  auto rep = validate_layered_td(g, td);
  if (!rep.ok()) throw PreconditionError("layered_ordering: " + to_string(rep.status) + ": " + rep.detail);
  auto depth = tree_depths(td);
  std::vector<int> home(g.order(), -1);
  for (int x = 0; x < td.nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (home[v] == -1 || depth[x] < depth[home[v]]) home[v] = x;
    }
  }
  std::vector<Vertex> seq(g.order());
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return depth[home[a]] < depth[home[b]]; });
  return VertexOrdering::from_sequence(std::move(seq));
}

LayeredTD grid_layered_td(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("grid_layered_td: p and q must be positive");
  LayeredTD td;
  td.nodes = std::max(1, p - 1);
  for (int i = 0; i < td.nodes; ++i) {
    VertexSet bag;
    for (int row = i; row <= std::min(i + 1, p - 1); ++row) {
      for (int c = 0; c < q; ++c) bag.push_back(row * q + c);
    }
    td.bags.push_back(std::move(bag));
    if (i > 0) td.tree_edges.emplace_back(i - 1, i);
  }
  for (int c = 0; c < q; ++c) {
    VertexSet column;
    for (int row = 0; row < p; ++row) column.push_back(row * q + c);
    td.layers.push_back(std::move(column));
  }
  td.layered_width = std::min(p, 2);
  return td;
}

}  // namespace improper
