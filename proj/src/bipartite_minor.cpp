#include "improper/bipartite_minor.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace improper {

namespace {

struct Remainder {
  VertexSet comp;
  std::vector<int> touching;  // ascending part indices adjacent to comp
};

Remainder remainder_at(const Graph& g, Vertex start, const std::vector<int>& owner) {
  VertexMask rest(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) rest[v] = owner[v] < 0;
  Remainder r;
  r.comp = component_of(g, start, rest);
  std::set<int> touching;
  for (Vertex v : r.comp) {
    for (Vertex w : g.neighbours(v)) {
      if (owner[w] >= 0) touching.insert(owner[w]);
    }
  }
  r.touching.assign(touching.begin(), touching.end());
  return r;
}

VertexSet attached_to(const Graph& g, const VertexSet& comp, const std::vector<int>& owner, int part) {
  VertexSet out;
  for (Vertex v : comp) {
    for (Vertex w : g.neighbours(v)) {
      if (owner[w] == part) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

PartInfo tree_info(const LexSubtree& s, VertexSet terminals, TreeKind kind) {
  PartInfo info;
  info.root = s.root;
  info.terminals = std::move(terminals);
  info.tree_kind = kind;
  for (Vertex v : s.vertices) {
    if (v != s.root) info.tree_edges.emplace_back(v, s.parent[v]);
  }
  info.leaves = s.leaves;
  info.pieces = subtree_pieces(s.root, info.tree_edges, info.leaves);
  return info;
}

PartInfo singleton_info(Vertex v) {
  PartInfo info;
  info.root = v;
  info.terminals = {v};
  info.tree_kind = TreeKind::lexbfs;
  info.pieces = {{v}};
  return info;
}

struct Builder {
  const Graph& g;
  ConnectedPartition p;
  std::vector<int> owner;

  Builder(const Graph& graph, int width) : g(graph), owner(graph.order(), -1) { p.width = width; }

  void add(VertexSet part, PartInfo info) {
    for (Vertex v : part) owner[v] = static_cast<int>(p.parts.size());
    p.parts.push_back(std::move(part));
    p.info.push_back(std::move(info));
  }
};

}  // namespace

DecompositionOutcome decompose_k2t(const Graph& g, int t) {
  if (t < 1) throw PreconditionError("decompose_k2t: t must be positive");
  Builder b(g, 1);
  for (Vertex start = 0; start < g.order();) {
    if (b.owner[start] >= 0) {
      ++start;
      continue;
    }
    auto rem = remainder_at(g, start, b.owner);
    if (rem.touching.empty()) {
      b.add({start}, singleton_info(start));
      continue;
    }
    if (rem.touching.size() > 1) throw Error("decompose_k2t: width invariant broken");
    const int a = rem.touching.front();
    VertexSet attach = attached_to(g, rem.comp, b.owner, a);
    auto in_comp = mask_of(g.order(), rem.comp);
    auto tree = lexbfs_tree(g, attach.front(), &in_comp);
    auto s = subtree_to(tree, attach);
    if (static_cast<int>(s.leaves.size()) >= t) {
      VertexSet core;
      std::set_difference(s.vertices.begin(), s.vertices.end(), s.leaves.begin(), s.leaves.end(),
                          std::back_inserter(core));
      std::vector<VertexSet> branch{b.p.parts[a], core};
      for (int i = 0; i < t; ++i) branch.push_back({s.leaves[i]});
      return {std::nullopt, make_model(Pattern::complete_join(2, t), std::move(branch))};
    }
    b.add(s.vertices, tree_info(s, attach, TreeKind::lexbfs));
  }
  return {std::move(b.p), std::nullopt};
}

ColourOutcome colour_k2t_defect(const Graph& g, int t) {
  auto d = decompose_k2t(g, t);
  if (d.certificate) return {std::nullopt, std::move(d.certificate)};
  return {partition_colourings(g, *d.partition, PartitionColouringMode::lex_defect), std::nullopt};
}

namespace {

using ThreeResult = std::variant<std::vector<int>, MinorModel>;

/// Graph on keep (in order) plus one extra vertex standing for `merged`,
/// adjacent to every kept vertex with a neighbour in merged.
struct Folded {
  Graph graph;
  std::vector<VertexSet> origins;
};

Folded fold(const Graph& g, const VertexSet& keep, const VertexSet& merged) {
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  const Vertex extra = static_cast<Vertex>(keep.size());
  auto in_merged = mask_of(g.order(), merged);
  std::vector<Edge> edges;
  for (Vertex v : keep) {
    bool touches = false;
    for (Vertex w : g.neighbours(v)) {
      if (local[w] > local[v]) edges.emplace_back(local[v], local[w]);
      touches = touches || in_merged[w];
    }
    if (touches) edges.emplace_back(local[v], extra);
  }
  Folded out{Graph(extra + 1, edges), {}};
  for (Vertex v : keep) out.origins.push_back({v});
  out.origins.push_back(merged);
  return out;
}

MinorModel lift(MinorModel m, const std::vector<VertexSet>& origins) {
  for (auto& set : m.branch_sets) {
    VertexSet expanded;
    for (Vertex v : set) expanded.insert(expanded.end(), origins[v].begin(), origins[v].end());
    set = sorted_set(std::move(expanded));
  }
  return m;
}

ThreeResult solve_connected(const Graph& g, int t, Vertex v, Vertex w);

Vertex smallest_neighbour(const Graph& g, Vertex v) { return g.neighbours(v).front(); }

ThreeResult solve_connected(const Graph& g, int t, Vertex v, Vertex w) {
  const int n = g.order();
  if (n <= t + 1) {
    std::vector<int> colour(n, 3);
    colour[v] = 1;
    colour[w] = 2;
    return colour;
  }

  if (g.degree(v) == 1 || g.degree(w) == 1) {
    const Vertex leaf = g.degree(v) == 1 ? v : w;
    const Vertex other = leaf == v ? w : v;
    VertexSet keep;
    for (Vertex u = 0; u < n; ++u) {
      if (u != leaf) keep.push_back(u);
    }
    auto sub = induced_subgraph(g, keep);
    Vertex o = sub.from_parent[other];
    auto r = solve_connected(sub.graph, t, o, smallest_neighbour(sub.graph, o));
    if (auto* m = std::get_if<MinorModel>(&r)) {
      std::vector<VertexSet> origins;
      for (Vertex u : sub.to_parent) origins.push_back({u});
      return lift(std::move(*m), origins);
    }
    const auto& c = std::get<std::vector<int>>(r);
    std::vector<int> colour(n, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) colour[keep[i]] = c[i];
    colour[leaf] = colour[other] == 1 ? 2 : 1;
    return colour;
  }

  // Grow A around v and B around w so that vw stays the only A-B edge.
  std::vector<int> side(n, 0);  // 1 = A, 2 = B
  side[v] = 1;
  side[w] = 2;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex u = 0; u < n; ++u) {
      if (side[u]) continue;
      bool to_a = false, to_b = false;
      for (Vertex x : g.neighbours(u)) {
        to_a = to_a || side[x] == 1;
        to_b = to_b || side[x] == 2;
      }
      if (to_a != to_b) {
        side[u] = to_a ? 1 : 2;
        grew = true;
      }
    }
  }
  VertexSet a, b, z, y;
  for (Vertex u = 0; u < n; ++u) {
    if (side[u] == 1) {
      a.push_back(u);
    } else if (side[u] == 2) {
      b.push_back(u);
    } else {
      bool to_a = false, to_b = false;
      for (Vertex x : g.neighbours(u)) {
        to_a = to_a || side[x] == 1;
        to_b = to_b || side[x] == 2;
      }
      (to_a && to_b ? z : y).push_back(u);
    }
  }

  if (static_cast<int>(z.size()) >= t) {
    std::vector<VertexSet> branch{a, b};
    for (int i = 0; i < t; ++i) branch.push_back({z[i]});
    return make_model(Pattern::complete_join(2, t), std::move(branch));
  }

  auto merge = [](VertexSet x, const VertexSet& more) {
    x.insert(x.end(), more.begin(), more.end());
    return sorted_set(std::move(x));
  };

  // G1: A plus x = B∪Z. G2: B plus y = A∪Z. Y is not adjacent to A or B.
  auto g1 = fold(g, a, merge(b, z));
  auto g2 = fold(g, b, merge(a, z));
  auto local_of = [](const VertexSet& keep, Vertex u) {
    return static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), u) - keep.begin());
  };
  const Vertex v1 = local_of(a, v), x1 = static_cast<Vertex>(a.size());
  const Vertex w2 = local_of(b, w), y2 = static_cast<Vertex>(b.size());

  auto r1 = solve_connected(g1.graph, t, v1, x1);
  if (auto* m = std::get_if<MinorModel>(&r1)) return lift(std::move(*m), g1.origins);
  auto r2 = solve_connected(g2.graph, t, w2, y2);
  if (auto* m = std::get_if<MinorModel>(&r2)) return lift(std::move(*m), g2.origins);
  const auto& c1 = std::get<std::vector<int>>(r1);
  const auto& c2 = std::get<std::vector<int>>(r2);

  std::vector<int> colour(n, 0);
  const int cx = c1[x1];
  const int third = 6 - cx - c1[v1];
  int perm2[4] = {0, 0, 0, 0};
  perm2[c2[y2]] = cx;
  perm2[c2[w2]] = third;
  perm2[6 - c2[y2] - c2[w2]] = c1[v1];

  for (std::size_t i = 0; i < a.size(); ++i) colour[a[i]] = c1[i];
  for (std::size_t i = 0; i < b.size(); ++i) colour[b[i]] = perm2[c2[i]];
  for (Vertex u : z) colour[u] = cx;

  if (!y.empty()) {
    auto g3 = fold(g, y, merge(merge(a, b), z));
    const Vertex z3 = static_cast<Vertex>(y.size());
    auto r3 = solve_connected(g3.graph, t, z3, smallest_neighbour(g3.graph, z3));
    if (auto* m = std::get_if<MinorModel>(&r3)) return lift(std::move(*m), g3.origins);
    const auto& c3 = std::get<std::vector<int>>(r3);
    // Swap the colour of z with the colour of x.
    for (std::size_t i = 0; i < y.size(); ++i) {
      int c = c3[i];
      colour[y[i]] = c == c3[z3] ? cx : (c == cx ? c3[z3] : c);
    }
  }
  return colour;
}

}  // namespace

std::variant<std::vector<int>, MinorModel> three_colour_k2t(const Graph& g, int t, std::optional<Edge> anchor) {
  if (t < 1) throw PreconditionError("three_colour_k2t: t must be positive");
  if (anchor && !g.has_edge(anchor->first, anchor->second)) {
    throw PreconditionError("three_colour_k2t: anchor is not an edge");
  }
  std::vector<int> colour(g.order(), 0);
  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      colour[comp.front()] = 1;
      continue;
    }
    auto sub = induced_subgraph(g, comp);
    Vertex v = 0, w = smallest_neighbour(sub.graph, 0);
    if (anchor && sub.from_parent[anchor->first] >= 0) {
      v = sub.from_parent[anchor->first];
      w = sub.from_parent[anchor->second];
    }
    auto r = solve_connected(sub.graph, t, v, w);
    if (auto* m = std::get_if<MinorModel>(&r)) {
      std::vector<VertexSet> origins;
      for (Vertex u : sub.to_parent) origins.push_back({u});
      return lift(std::move(*m), origins);
    }
    const auto& c = std::get<std::vector<int>>(r);
    for (std::size_t i = 0; i < comp.size(); ++i) colour[comp[i]] = c[i];
  }
  return colour;
}

namespace {

/// Unit vertex-capacity max flow between two vertex sets of a small graph,
/// stopping once `limit` paths are found.
class VertexFlow {
 public:
  VertexFlow(int nodes, const std::vector<Edge>& edges, const VertexSet& sources, const VertexSet& sinks)
      : nodes_(nodes), adj_(2 * nodes + 2) {
    const int unbounded = nodes + 1;
    for (int v = 0; v < nodes; ++v) add(in(v), out(v), 1);
    for (auto [u, v] : edges) {
      add(out(u), in(v), unbounded);
      add(out(v), in(u), unbounded);
    }
    for (Vertex s : sources) add(source(), in(s), unbounded);
    for (Vertex s : sinks) add(out(s), sink(), unbounded);
  }

  int run(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  /// Paths of the flow as node sequences, source side first.
  std::vector<std::vector<Vertex>> paths() const {
    std::vector<std::vector<Vertex>> out;
    for (int e : adj_[source()]) {
      if (!carries(e)) continue;
      std::vector<Vertex> path;
      int at = arcs_[e].to;
      while (at != sink()) {
        const Vertex v = at / 2;
        path.push_back(v);
        int next = -1;
        for (int f : adj_[this->out(v)]) {
          if (carries(f)) {
            next = arcs_[f].to;
            break;
          }
        }
        at = next;
      }
      out.push_back(std::move(path));
    }
    return out;
  }

  /// Minimum separator read off the final residual graph.
  VertexSet cut() const {
    std::vector<char> reach(adj_.size(), 0);
    std::deque<int> queue{source()};
    reach[source()] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e : adj_[u]) {
        if (arcs_[e].cap > 0 && !reach[arcs_[e].to]) {
          reach[arcs_[e].to] = 1;
          queue.push_back(arcs_[e].to);
        }
      }
    }
    VertexSet out;
    for (int v = 0; v < nodes_; ++v) {
      if (reach[in(v)] && !reach[this->out(v)]) out.push_back(v);
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int initial;
  };

  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }
  int source() const { return 2 * nodes_; }
  int sink() const { return 2 * nodes_ + 1; }
  bool carries(int e) const { return arcs_[e].cap < arcs_[e].initial; }

  void add(int u, int v, int cap) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, cap});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0, 0});
  }

  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{source()};
    seen[source()] = 1;
    while (!queue.empty() && !seen[sink()]) {
      int u = queue.front();
      queue.pop_front();
      for (int e : adj_[u]) {
        int v = arcs_[e].to;
        if (arcs_[e].cap > 0 && !seen[v]) {
          seen[v] = 1;
          via[v] = e;
          queue.push_back(v);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (int v = sink(); v != source();) {
      int e = via[v];
      arcs_[e].cap -= 1;
      arcs_[e ^ 1].cap += 1;
      v = arcs_[e ^ 1].to;
    }
    return true;
  }

  int nodes_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool separates(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& cut, const VertexMask* within) {
  const int n = g.order();
  auto blocked = mask_of(n, cut);
  auto is_b = mask_of(n, b);
  VertexMask seen(n, 0);
  std::deque<Vertex> queue;
  for (Vertex x : a) {
    if (!blocked[x] && !seen[x]) {
      seen[x] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (is_b[v]) return false;
    for (Vertex w : g.neighbours(v)) {
      if (seen[w] || blocked[w] || (within && !(*within)[w])) continue;
      seen[w] = 1;
      queue.push_back(w);
    }
  }
  return true;
}

SeparatorOutcome separator_ab(const Graph& g, std::span<const Vertex> a_in, std::span<const Vertex> b_in, int t,
                              const VertexMask* within) {
  if (a_in.empty() || b_in.empty()) throw PreconditionError("separator_ab: A and B must be non-empty");
  if (t < 1) throw PreconditionError("separator_ab: t must be positive");
  const int n = g.order();
  const VertexSet a = sorted_set({a_in.begin(), a_in.end()});
  const VertexSet b = sorted_set({b_in.begin(), b_in.end()});
  for (Vertex x : a) {
    if (!g.valid(x) || (within && !(*within)[x])) throw PreconditionError("separator_ab: A outside the vertex set");
  }
  for (Vertex x : b) {
    if (!g.valid(x) || (within && !(*within)[x])) throw PreconditionError("separator_ab: B outside the vertex set");
  }

  SeparatorOutcome out;
  out.tree = lexbfs_tree(g, a.front(), within);
  const LexTree& x_tree = out.tree;
  const Vertex r = x_tree.root;

  auto closure = [&](const VertexSet& l) {
    VertexMask m(n, 0);
    m[r] = 1;
    for (Vertex x : l) {
      for (Vertex u = x; u != -1 && !m[u]; u = x_tree.parent[u]) m[u] = 1;
    }
    return m;
  };
  auto leaves_of = [&](const VertexMask& m) {
    std::vector<int> children(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (m[v] && v != r) ++children[x_tree.parent[v]];
    }
    VertexSet l;
    for (Vertex v = 0; v < n; ++v) {
      if (m[v] && v != r && children[v] == 0) l.push_back(v);
    }
    return l;
  };

  VertexSet l = leaves_of(closure(b));
  while (true) {
    ++out.rounds;
    const VertexMask tl = closure(l);
    if (!separates(g, a, b, set_of(tl), within)) throw Error("separator_ab: T_L lost the separation property");

    std::vector<int> children(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (tl[v] && v != r) ++children[x_tree.parent[v]];
    }
    auto tree_degree = [&](Vertex u) { return children[u] + (u == r ? 0 : 1); };

    // Leaf paths Q_x and their attachment vertices p_x.
    std::vector<Vertex> node_of(n, -1);  // vertex -> H node
    std::vector<Vertex> p_of(l.size());
    std::vector<std::vector<Vertex>> q_of(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
      Vertex u = l[i];
      q_of[i].push_back(u);
      Vertex p = x_tree.parent[u];
      while (p != r && tree_degree(p) < 3) {
        q_of[i].push_back(p);
        p = x_tree.parent[p];
      }
      p_of[i] = p;
      for (Vertex q : q_of[i]) node_of[q] = static_cast<Vertex>(i);
    }
    VertexMask in_t0(n, 0);
    for (Vertex v = 0; v < n; ++v) in_t0[v] = tl[v] && node_of[v] == -1;

    // H = G - T0 with each Q_x contracted; nodes 0..|L|-1 are the y_x.
    std::vector<Vertex> original;  // H node -> vertex for the uncontracted part
    int nodes = static_cast<int>(l.size());
    for (Vertex v = 0; v < n; ++v) {
      if ((within && !(*within)[v]) || tl[v]) continue;
      node_of[v] = nodes++;
      original.push_back(v);
    }
    std::vector<Edge> h_edges;
    for (auto [u, v] : g.edges()) {
      if (node_of[u] < 0 || node_of[v] < 0 || in_t0[u] || in_t0[v] || node_of[u] == node_of[v]) continue;
      h_edges.emplace_back(node_of[u], node_of[v]);
    }
    h_edges = Graph::simplified(nodes, h_edges).edges();
    VertexSet h_a, h_b;
    for (Vertex x : a) {
      if (node_of[x] >= 0 && !in_t0[x]) h_a.push_back(node_of[x]);
    }
    for (Vertex x : b) {
      if (node_of[x] >= 0 && !in_t0[x]) h_b.push_back(node_of[x]);
    }
    h_a = sorted_set(std::move(h_a));
    h_b = sorted_set(std::move(h_b));

    VertexFlow flow(nodes, h_edges, h_a, h_b);
    const int size = flow.run(t + 1);
    const std::size_t contracted = l.size();
    auto expand = [&](const std::vector<Vertex>& path) {
      VertexSet set;
      for (Vertex h : path) {
        if (h < static_cast<Vertex>(contracted)) {
          set.insert(set.end(), q_of[h].begin(), q_of[h].end());
        } else {
          set.push_back(original[h - contracted]);
        }
      }
      return sorted_set(std::move(set));
    };

    if (size >= t + 1) {
      auto paths = flow.paths();
      std::vector<VertexSet> branch;
      VertexSet hub = expand(paths[t]);
      for (Vertex v = 0; v < n; ++v) {
        if (in_t0[v]) hub.push_back(v);
      }
      branch.push_back(sorted_set(std::move(hub)));
      for (int i = 0; i < t; ++i) branch.push_back(expand(paths[i]));
      out.certificate = make_model(Pattern::complete_join(1, t), std::move(branch));
      return out;
    }

    VertexSet cut = flow.cut();
    VertexSet next;
    std::set<Vertex> at_s1;
    std::vector<char> in_s1(l.size(), 0);
    for (Vertex h : cut) {
      if (h < static_cast<Vertex>(contracted)) {
        in_s1[h] = 1;
        next.push_back(l[h]);
        at_s1.insert(p_of[h]);
      } else {
        next.push_back(original[h - contracted]);
      }
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!in_s1[i] && !at_s1.count(p_of[i])) next.push_back(p_of[i]);
    }
    VertexSet reduced = leaves_of(closure(sorted_set(std::move(next))));
    if (reduced.size() >= l.size()) break;
    l = std::move(reduced);
  }

  if (static_cast<int>(l.size()) > 2 * t) throw Error("separator_ab: fixed point has more than 2t leaves");

  // Extend by the tree path to the B vertex closest to T_L.
  const VertexMask tl = closure(l);
  Vertex best = -1;
  int best_dist = std::numeric_limits<int>::max();
  for (Vertex x : b) {
    int d = 0;
    for (Vertex u = x; !tl[u]; u = x_tree.parent[u]) ++d;
    if (d < best_dist) {
      best_dist = d;
      best = x;
    }
  }
  VertexSet targets = l;
  targets.push_back(best);
  targets.push_back(r);
  out.subtree = subtree_to(x_tree, sorted_set(std::move(targets)));
  if (!separates(g, a, b, out.subtree->vertices, within)) throw Error("separator_ab: final subtree does not separate");
  return out;
}

DecompositionOutcome decompose_k3t(const Graph& g, int t) {
  if (t < 1) throw PreconditionError("decompose_k3t: t must be positive");
  Builder b(g, 2);
  for (Vertex start = 0; start < g.order();) {
    if (b.owner[start] >= 0) {
      ++start;
      continue;
    }
    auto rem = remainder_at(g, start, b.owner);
    if (rem.touching.empty()) {
      b.add({start}, singleton_info(start));
      continue;
    }
    if (rem.touching.size() == 1) {
      Vertex v = attached_to(g, rem.comp, b.owner, rem.touching.front()).front();
      b.add({v}, singleton_info(v));
      continue;
    }
    if (rem.touching.size() > 2) throw Error("decompose_k3t: width invariant broken");
    const int ia = rem.touching[0], ib = rem.touching[1];
    VertexSet sa = attached_to(g, rem.comp, b.owner, ia);
    VertexSet sb = attached_to(g, rem.comp, b.owner, ib);
    auto in_comp = mask_of(g.order(), rem.comp);
    auto sep = separator_ab(g, sa, sb, t, &in_comp);
    if (sep.certificate) {
      std::vector<VertexSet> branch{b.p.parts[ia], b.p.parts[ib]};
      for (auto& set : sep.certificate->branch_sets) branch.push_back(set);
      return {std::nullopt, make_model(Pattern::complete_join(3, t), std::move(branch))};
    }
    VertexSet terminals = sa;
    terminals.insert(terminals.end(), sb.begin(), sb.end());
    b.add(sep.subtree->vertices, tree_info(*sep.subtree, sorted_set(std::move(terminals)), TreeKind::lexbfs));
  }
  return {std::move(b.p), std::nullopt};
}

DecompositionOutcome decompose_kst(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw PreconditionError("decompose_kst: need 1 <= s <= t");
  const int n = g.order();
  Builder b(g, s);
  for (Vertex start = 0; start < n;) {
    if (b.owner[start] >= 0) {
      ++start;
      continue;
    }
    auto rem = remainder_at(g, start, b.owner);
    if (rem.touching.empty()) {
      b.add({start}, singleton_info(start));
      continue;
    }
    const int k = static_cast<int>(rem.touching.size());
    if (k > s) throw Error("decompose_kst: width invariant broken");
    std::vector<VertexMask> attach;
    for (int j : rem.touching) attach.push_back(mask_of(n, attached_to(g, rem.comp, b.owner, j)));

    VertexMask avail = mask_of(n, rem.comp);
    VertexMask used(n, 0);
    std::vector<VertexSet> fs;
    PartInfo info;
    info.tree_kind = TreeKind::bfs;
    auto meets_all = [&](const VertexSet& set) {
      for (const auto& m : attach) {
        if (std::none_of(set.begin(), set.end(), [&](Vertex v) { return m[v] != 0; })) return false;
      }
      return true;
    };

    while (true) {
      Vertex root = -1;
      if (fs.empty()) {
        for (Vertex v : rem.comp) {
          if (attach[0][v]) {
            root = v;
            break;
          }
        }
      } else {
        for (Vertex v : rem.comp) {
          if (!avail[v]) continue;
          bool next_to_f = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                                       [&](Vertex w) { return used[w] != 0; });
          if (next_to_f && meets_all(component_of(g, v, avail))) {
            root = v;
            break;
          }
        }
      }
      if (root == -1) break;
      auto region = mask_of(n, component_of(g, root, avail));
      auto tree = lexbfs_tree(g, root, &region);
      VertexSet targets;
      for (const auto& m : attach) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
          if (region[v] && m[v] && (best == -1 || tree.layer_index[v] < tree.layer_index[best])) best = v;
        }
        targets.push_back(best);
      }
      auto sub = subtree_to(tree, sorted_set(std::move(targets)));
      auto piece_info = tree_info(sub, {}, TreeKind::bfs);
      if (fs.empty()) info.root = root;
      info.tree_edges.insert(info.tree_edges.end(), piece_info.tree_edges.begin(), piece_info.tree_edges.end());
      info.leaves.insert(info.leaves.end(), sub.leaves.begin(), sub.leaves.end());
      for (auto& piece : piece_info.pieces) info.pieces.push_back(std::move(piece));
      for (Vertex v : sub.vertices) {
        avail[v] = 0;
        used[v] = 1;
      }
      fs.push_back(sub.vertices);
      if (k < s) break;
      if (static_cast<int>(fs.size()) >= t) {
        std::vector<VertexSet> branch;
        for (int j : rem.touching) branch.push_back(b.p.parts[j]);
        for (int i = 0; i < t; ++i) branch.push_back(fs[i]);
        return {std::nullopt, make_model(Pattern::complete_join(s, t), std::move(branch))};
      }
    }
    VertexSet part = set_of(used);
    for (const auto& m : attach) {
      for (Vertex v : part) {
        if (m[v]) info.terminals.push_back(v);
      }
    }
    info.terminals = sorted_set(std::move(info.terminals));
    info.leaves = sorted_set(std::move(info.leaves));
    b.add(std::move(part), std::move(info));
  }
  return {std::move(b.p), std::nullopt};
}

std::optional<K3tColourMode> parse_k3t_mode(const std::string& name) {
  if (name == "defect") return K3tColourMode::defect;
  if (name == "clustered6") return K3tColourMode::clustered6;
  if (name == "layered6") return K3tColourMode::layered6;
  return std::nullopt;
}

std::string to_string(K3tColourMode mode) {
  switch (mode) {
    case K3tColourMode::defect:
      return "defect";
    case K3tColourMode::clustered6:
      return "clustered6";
    case K3tColourMode::layered6:
      return "layered6";
  }
  return {};
}

ColourOutcome colour_k3t(const Graph& g, int t, K3tColourMode mode) {
  if (mode != K3tColourMode::layered6) {
    auto d = decompose_k3t(g, t);
    if (d.certificate) return {std::nullopt, std::move(d.certificate)};
    auto m = mode == K3tColourMode::defect ? PartitionColouringMode::lex_defect : PartitionColouringMode::clustered;
    return {partition_colourings(g, *d.partition, m), std::nullopt};
  }

  std::vector<int> colour(g.order(), 0);
  for (const auto& comp : components(g)) {
    auto in_comp = mask_of(g.order(), comp);
    auto dist = bfs_distances(g, comp.front(), &in_comp);
    int depth = 0;
    for (Vertex v : comp) depth = std::max(depth, dist[v]);
    for (int i = 0; i <= depth; ++i) {
      VertexSet layer, ball;
      for (Vertex v : comp) {
        if (dist[v] == i) layer.push_back(v);
        if (dist[v] < i) ball.push_back(v);
      }
      auto sub = induced_subgraph(g, layer);
      auto r = three_colour_k2t(sub.graph, t);
      if (auto* m = std::get_if<MinorModel>(&r)) {
        std::vector<VertexSet> branch{ball};
        for (const auto& set : m->branch_sets) {
          VertexSet mapped;
          for (Vertex u : set) mapped.push_back(sub.to_parent[u]);
          branch.push_back(sorted_set(std::move(mapped)));
        }
        return {std::nullopt, make_model(Pattern::complete_join(3, t), std::move(branch))};
      }
      const auto& c = std::get<std::vector<int>>(r);
      for (std::size_t j = 0; j < layer.size(); ++j) colour[layer[j]] = c[j] + 3 * (i % 2);
    }
  }
  return {make_colouring(g, std::move(colour)), std::nullopt};
}

}  // namespace improper
