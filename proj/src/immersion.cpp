#include "improper/immersion.hpp"

#include <algorithm>
#include <deque>

namespace improper {

namespace {

struct Rooted {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;  // BFS order from the root
};

/// Roots a tree on n nodes at 0; returns nullopt if it is not a spanning tree.
std::optional<Rooted> root_tree(int n, const std::vector<Edge>& edges) {
  if (n == 0) return Rooted{};
  if (static_cast<int>(edges.size()) != n - 1) return std::nullopt;
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) return std::nullopt;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  Rooted r;
  r.parent.assign(n, -2);
  r.parent[0] = -1;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    r.order.push_back(x);
    for (Vertex y : adj[x]) {
      if (r.parent[y] == -2) {
        r.parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (static_cast<int>(r.order.size()) != n) return std::nullopt;
  return r;
}

/// Edges of g crossing the cut below each non-root vertex, via subtree labels.
std::vector<int> cut_sizes(const Graph& g, const Rooted& t) {
  const int n = g.order();
  std::vector<int> tin(n), tout(n);
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : t.order) {
    if (t.parent[v] >= 0) children[t.parent[v]].push_back(v);
  }
  int clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  tin[0] = clock++;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < children[v].size()) {
      Vertex c = children[v][i++];
      tin[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      tout[v] = clock;
      stack.pop_back();
    }
  }
  std::vector<int> cut(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (t.parent[v] < 0) continue;
    for (auto [a, b] : g.edges()) {
      bool ia = tin[a] >= tin[v] && tin[a] < tout[v];
      bool ib = tin[b] >= tin[v] && tin[b] < tout[v];
      cut[v] += ia != ib;
    }
  }
  return cut;
}

}  // namespace

CutTreeReport check_cut_tree(const Graph& g, const CutTree& ct) {
  CutTreeReport rep;
  auto rooted = root_tree(g.order(), ct.tree_edges);
  if (!rooted) {
    rep.ok = false;
    rep.detail = "tree edges do not form a spanning tree";
    return rep;
  }
  auto cut = cut_sizes(g, *rooted);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (rooted->parent[v] < 0) continue;
    rep.worst_cut = std::max(rep.worst_cut, cut[v]);
    if (cut[v] > ct.k && !rep.offending) {
      rep.ok = false;
      rep.offending = Edge{std::min(v, rooted->parent[v]), std::max(v, rooted->parent[v])};
      rep.detail = "tree edge " + std::to_string(rep.offending->first) + "-" + std::to_string(rep.offending->second) +
                   " is crossed by " + std::to_string(cut[v]) + " edges, more than " + std::to_string(ct.k);
    }
  }
  return rep;
}

Colouring tree_cut_2colour(const Graph& g, const CutTree& ct) {
  auto rep = check_cut_tree(g, ct);
  if (!rep.ok) throw PreconditionError("tree_cut_2colour: " + rep.detail);
  const int n = g.order();
  const int k = ct.k;
  if (n == 0) return make_colouring(g, {});

  // Dense adjacency of the contracted graph; absorbed vertices are dead.
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) {
    adj[u][v] = 1;
    adj[v][u] = 1;
  }
  std::vector<std::vector<char>> tree(n, std::vector<char>(n, 0));
  for (auto [a, b] : ct.tree_edges) tree[a][b] = tree[b][a] = 1;
  std::vector<char> alive(n, 1);
  std::vector<std::pair<Vertex, Vertex>> steps;  // (w, u): w coloured opposite to u

  while (true) {
    // Root the current tree at 0 and find subtrees.
    std::vector<Vertex> parent(n, -2), order;
    parent[0] = -1;
    std::deque<Vertex> queue{0};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (Vertex y = 0; y < n; ++y) {
        if (alive[y] && tree[x][y] && parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    auto degree = [&](Vertex v) {
      int d = 0;
      for (Vertex w = 0; w < n; ++w) d += alive[w] ? adj[v][w] : 0;
      return d;
    };
    std::vector<char> large(n, 0), large_below(n, 0);
    for (Vertex v : order) large[v] = degree(v) >= k + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (parent[*it] >= 0 && (large[*it] || large_below[*it])) large_below[parent[*it]] = 1;
    }
    Vertex u = -1;
    for (Vertex v : order) {
      if (large[v] && !large_below[v] && (u == -1 || v < u)) u = v;
    }
    if (u == -1) break;

    auto subtree = [&](Vertex top) {
      std::vector<char> in(n, 0);
      in[top] = 1;
      for (Vertex v : order) {
        if (parent[v] >= 0 && in[parent[v]]) in[v] = 1;
      }
      return in;
    };
    // Side of the tree edge uv that contains u.
    std::vector<char> side;
    if (parent[u] >= 0) {
      side = subtree(u);
    } else {
      Vertex child = -1;
      for (Vertex v : order) {
        if (parent[v] == u && (child == -1 || v < child)) child = v;
      }
      if (child == -1) break;
      auto below = subtree(child);
      side.assign(n, 0);
      for (Vertex v : order) side[v] = !below[v];
    }
    Vertex w = -1;
    for (Vertex x = 0; x < n && w == -1; ++x) {
      if (!alive[x] || !side[x] || x == u) continue;
      bool inside = true;
      for (Vertex y = 0; y < n && inside; ++y) inside = !(alive[y] && adj[x][y] && !side[y]);
      if (inside) w = x;
    }
    if (w == -1) throw Error("tree_cut_2colour: no absorbable vertex found");
    // Contract w into its tree parent, dropping loops and parallel edges.
    const Vertex z = parent[w];
    for (Vertex y = 0; y < n; ++y) {
      if (!alive[y] || y == w || y == z) continue;
      if (adj[w][y]) adj[z][y] = adj[y][z] = 1;
      if (tree[w][y]) tree[z][y] = tree[y][z] = 1;
    }
    adj[z][w] = adj[w][z] = 0;
    for (Vertex y = 0; y < n; ++y) {
      adj[w][y] = adj[y][w] = 0;
      tree[w][y] = tree[y][w] = 0;
    }
    alive[w] = 0;
    steps.emplace_back(w, u);
  }

  // Survivors have degree at most k: colour them by depth parity.
  std::vector<int> colour(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || colour[s]) continue;
    colour[s] = 1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y = 0; y < n; ++y) {
        if (alive[y] && adj[x][y] && !colour[y]) {
          colour[y] = 3 - colour[x];
          queue.push_back(y);
        }
      }
    }
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) colour[it->first] = 3 - colour[it->second];
  return make_colouring(g, std::move(colour));
}

long long TPartitionStats::defect_bound(int multiplicity) const {
  const long long a = adhesion, b = max_bag;
  return static_cast<long long>(multiplicity) * (a * std::min(a, b) + b - 1);
}

TPartitionStats tpartition_stats(const Graph& g, const TPartition& tp) {
  if (static_cast<int>(tp.bags.size()) != tp.nodes) throw PreconditionError("tpartition: bag count differs from node count");
  auto rooted = root_tree(tp.nodes, tp.tree_edges);
  if (!rooted) throw PreconditionError("tpartition: tree edges do not form a tree");
  std::vector<int> owner(g.order(), -1);
  TPartitionStats stats;
  for (int x = 0; x < tp.nodes; ++x) {
    for (Vertex v : tp.bags[x]) {
      if (!g.valid(v) || owner[v] != -1) throw PreconditionError("tpartition: bags do not partition the vertices");
      owner[v] = x;
    }
    stats.max_bag = std::max(stats.max_bag, static_cast<int>(tp.bags[x].size()));
  }
  if (std::count(owner.begin(), owner.end(), -1) > 0) throw PreconditionError("tpartition: a vertex is in no bag");
  // Cut below node x: g-edges with exactly one end in bags of the subtree at x.
  for (Vertex x : rooted->order) {
    if (rooted->parent[x] < 0) continue;
    std::vector<char> in(tp.nodes, 0);
    in[x] = 1;
    for (Vertex y : rooted->order) {
      if (rooted->parent[y] >= 0 && in[rooted->parent[y]]) in[y] = 1;
    }
    int crossing = 0;
    for (auto [u, v] : g.edges()) crossing += in[owner[u]] != in[owner[v]];
    stats.adhesion = std::max(stats.adhesion, crossing);
  }
  return stats;
}

Colouring tpartition_2colour(const Graph& g, const TPartition& tp) {
  auto stats = tpartition_stats(g, tp);
  std::vector<int> owner(g.order(), -1);
  for (int x = 0; x < tp.nodes; ++x) {
    for (Vertex v : tp.bags[x]) owner[v] = x;
  }
  std::vector<Edge> q_edges;
  for (auto [u, v] : g.edges()) {
    if (owner[u] != owner[v]) q_edges.emplace_back(owner[u], owner[v]);
  }
  Graph q = Graph::simplified(tp.nodes, q_edges);
  CutTree ct{tp.tree_edges, stats.adhesion};
  auto rep = check_cut_tree(q, ct);
  if (!rep.ok) throw Error("tpartition_2colour: quotient cut exceeds adhesion");
  auto qc = tree_cut_2colour(q, ct);
  std::vector<int> colour(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colour[v] = qc.colour[owner[v]];
  return make_colouring(g, std::move(colour));
}

}  // namespace improper
