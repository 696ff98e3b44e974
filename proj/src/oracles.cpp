#include "improper/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace improper::oracle {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : up_(n), size_(n, 1) { std::iota(up_.begin(), up_.end(), 0); }
  int find(int x) {
    while (up_[x] != x) x = up_[x] = up_[up_[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    up_[b] = a;
    size_[a] += size_[b];
  }
  int size(int x) { return size_[find(x)]; }

 private:
  std::vector<int> up_;
  std::vector<int> size_;
};

bool connected_set(const Graph& g, const VertexSet& set) {
  if (set.empty()) return false;
  std::set<Vertex> in(set.begin(), set.end());
  std::set<Vertex> seen{set.front()};
  std::vector<Vertex> stack{set.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(v)) {
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == in.size();
}

}  // namespace

ModelCheck validate_minor_model(const Graph& g, const MinorModel& m) {
  auto fail = [](std::string detail) { return ModelCheck{false, std::move(detail)}; };
  const int h = m.pattern.order();
  if (static_cast<int>(m.branch_sets.size()) != h) {
    return fail("expected " + std::to_string(h) + " branch sets, got " + std::to_string(m.branch_sets.size()));
  }
  std::vector<int> owner(g.order(), -1);
  for (int i = 0; i < h; ++i) {
    if (m.branch_sets[i].empty()) return fail("branch set " + std::to_string(i) + " is empty");
    for (Vertex v : m.branch_sets[i]) {
      if (!g.valid(v)) return fail("branch set " + std::to_string(i) + " holds invalid vertex " + std::to_string(v));
      if (owner[v] != -1) {
        return fail("vertex " + std::to_string(v) + " is in branch sets " + std::to_string(owner[v]) + " and " +
                    std::to_string(i));
      }
      owner[v] = i;
    }
  }
  for (int i = 0; i < h; ++i) {
    if (!connected_set(g, m.branch_sets[i])) return fail("branch set " + std::to_string(i) + " is disconnected");
  }
  std::vector<std::vector<char>> touch(h, std::vector<char>(h, 0));
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0) touch[owner[u]][owner[v]] = touch[owner[v]][owner[u]] = 1;
  }
  for (auto [a, b] : m.pattern.graph().edges()) {
    if (!touch[a][b]) {
      return fail("branch sets " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    }
  }
  return {};
}

namespace {

using Mask = std::uint32_t;

int low_bit(Mask m) { return __builtin_ctz(m); }
int bits(Mask m) { return __builtin_popcount(m); }

struct MinorSearch {
  int n;
  std::vector<Mask> nb;
  int h;
  std::vector<Mask> pattern_nb;
  std::vector<int> pattern_deg;
  std::vector<Mask> blocks;
  std::optional<std::vector<Mask>> found;

  int components(Mask r) const {
    int count = 0;
    while (r) {
      Mask frontier = Mask{1} << low_bit(r), comp = 0;
      while (frontier) {
        comp |= frontier;
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= nb[low_bit(f)];
        frontier = next & r & ~comp;
      }
      r &= ~comp;
      ++count;
    }
    return count;
  }

  /// Injective map of pattern vertices to blocks respecting all pattern edges.
  bool embed(const std::vector<Mask>& adj) {
    std::vector<int> deg(h);
    for (int i = 0; i < h; ++i) deg[i] = bits(adj[i]);
    std::vector<int> image(h, -1);
    Mask used = 0;
    std::function<bool(int)> place = [&](int p) {
      if (p == h) return true;
      for (int b = 0; b < h; ++b) {
        if (used >> b & 1 || deg[b] < pattern_deg[p]) continue;
        bool ok = true;
        for (int q = 0; q < p && ok; ++q) {
          if (pattern_nb[p] >> q & 1) ok = adj[b] >> image[q] & 1;
        }
        if (!ok) continue;
        image[p] = b;
        used |= Mask{1} << b;
        if (place(p + 1)) return true;
        used &= ~(Mask{1} << b);
      }
      return false;
    };
    if (!place(0)) return false;
    std::vector<Mask> ordered(h);
    for (int p = 0; p < h; ++p) ordered[p] = blocks[image[p]];
    found = ordered;
    return true;
  }

  bool finish() {
    std::vector<Mask> adj(h, 0);
    for (int i = 0; i < h; ++i) {
      Mask reach = 0;
      for (Mask f = blocks[i]; f; f &= f - 1) reach |= nb[low_bit(f)];
      for (int j = 0; j < h; ++j) {
        if (j != i && (reach & blocks[j])) adj[i] |= Mask{1} << j;
      }
    }
    return embed(adj);
  }

  bool place(Mask remaining) {
    const int index = static_cast<int>(blocks.size());
    if (index == h - 1) {
      if (components(remaining) != 1) return false;
      blocks.push_back(remaining);
      bool ok = finish();
      blocks.pop_back();
      return ok;
    }
    const int seed = low_bit(remaining);
    return grow(remaining, Mask{1} << seed, nb[seed] & remaining & ~(Mask{1} << seed), Mask{1} << seed);
  }

  /// Enumerates connected sets containing the seed once each.
  bool grow(Mask remaining, Mask set, Mask ext, Mask banned) {
    const int left = h - 1 - static_cast<int>(blocks.size());
    Mask rest = remaining & ~set;
    if (bits(rest) >= left && rest && components(rest) <= left) {
      blocks.push_back(set);
      bool ok = place(rest);
      blocks.pop_back();
      if (ok) return true;
    }
    while (ext) {
      const int u = low_bit(ext);
      const Mask bit = Mask{1} << u;
      ext &= ~bit;
      Mask next = (ext | (nb[u] & remaining)) & ~set & ~banned & ~bit;
      if (grow(remaining, set | bit, next, banned | bit)) return true;
      banned |= bit;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& g, const Pattern& pattern) {
  const int n = g.order();
  if (n > kMinorCap) throw CapExceeded("has_minor: n = " + std::to_string(n) + " exceeds cap 14");
  const Graph hg = pattern.graph();
  const int h = hg.order();
  if (h == 0) return make_model(pattern, {});
  if (h > n || hg.size() > g.size()) return std::nullopt;

  MinorSearch search{n, std::vector<Mask>(n, 0), h, std::vector<Mask>(h, 0), std::vector<int>(h, 0), {}, {}};
  for (auto [u, v] : g.edges()) {
    search.nb[u] |= Mask{1} << v;
    search.nb[v] |= Mask{1} << u;
  }
  for (auto [a, b] : hg.edges()) {
    search.pattern_nb[a] |= Mask{1} << b;
    search.pattern_nb[b] |= Mask{1} << a;
  }
  for (int p = 0; p < h; ++p) search.pattern_deg[p] = bits(search.pattern_nb[p]);

  // Every pattern here is connected, so a model lives in one component and
  // can be grown to a partition of that component.
  Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  while (all) {
    Mask comp = Mask{1} << low_bit(all), frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= search.nb[low_bit(f)];
      frontier = next & ~comp;
      comp |= frontier;
    }
    all &= ~comp;
    if (bits(comp) < h) continue;
    if (h == 1 || search.place(comp)) {
      std::vector<VertexSet> sets;
      if (h == 1) {
        sets.push_back({low_bit(comp)});
      } else {
        for (Mask b : *search.found) {
          VertexSet set;
          for (Mask f = b; f; f &= f - 1) set.push_back(low_bit(f));
          sets.push_back(std::move(set));
        }
      }
      return make_model(pattern, std::move(sets));
    }
  }
  return std::nullopt;
}

ColouringMetrics validate_colouring(const Graph& g, const std::vector<int>& colour) {
  const int n = g.order();
  if (static_cast<int>(colour.size()) != n) throw PreconditionError("validate_colouring: size mismatch");
  ColouringMetrics m;
  std::set<int> used;
  std::vector<int> mono(n, 0);
  UnionFind uf(n);
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] < 0) throw PreconditionError("validate_colouring: negative colour");
    if (colour[v] > 0) used.insert(colour[v]);
  }
  for (auto [u, v] : g.edges()) {
    if (colour[u] > 0 && colour[u] == colour[v]) {
      ++mono[u];
      ++mono[v];
      uf.join(u, v);
    }
  }
  m.num_colours = static_cast<int>(used.size());
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == 0) continue;
    m.defect = std::max(m.defect, mono[v]);
    m.clustering = std::max(m.clustering, uf.size(v));
  }
  return m;
}

std::vector<ColourClass> colour_class_profile(const Graph& g, const std::vector<int>& colour) {
  const int n = g.order();
  std::map<int, ColourClass> out;
  std::vector<int> mono(n, 0);
  UnionFind uf(n);
  std::map<int, int> edges_in;  // union-find root -> monochromatic edges
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] > 0) out[colour[v]].colour = colour[v];
  }
  for (auto [u, v] : g.edges()) {
    if (colour[u] > 0 && colour[u] == colour[v]) {
      ++mono[u];
      ++mono[v];
      uf.join(u, v);
      out[colour[u]].independent = false;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (colour[u] > 0 && colour[u] == colour[v]) ++edges_in[uf.find(u)];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] == 0) continue;
    auto& c = out[colour[v]];
    c.max_component = std::max(c.max_component, uf.size(v));
    const int root = uf.find(v);
    // A component is a path iff it is a tree with maximum degree 2.
    if (mono[v] > 2 || edges_in[root] != uf.size(v) - 1) c.path_forest = false;
  }
  std::vector<ColourClass> list;
  for (auto& [k, c] : out) list.push_back(c);
  return list;
}

namespace {

/// Shortest a-b path avoiding `blocked`, or empty.
std::vector<Vertex> shortest_path(const Graph& g, Vertex a, Vertex b, const std::vector<char>& blocked) {
  std::vector<Vertex> prev(g.order(), -2);
  prev[a] = -1;
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (Vertex w : g.neighbours(v)) {
      if (prev[w] == -2 && !blocked[w]) {
        prev[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (prev[b] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Chordality is_chordal(const Graph& g) {
  const int n = g.order();
  Chordality out;
  // LexBFS with explicit labels.
  std::vector<std::vector<int>> label(n);
  std::vector<char> done(n, 0);
  std::vector<Vertex> visit;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && (pick == -1 || label[v] > label[pick])) pick = v;
    }
    done[pick] = 1;
    visit.push_back(pick);
    for (Vertex w : g.neighbours(pick)) {
      if (!done[w]) label[w].push_back(n - step);
    }
  }
  std::vector<int> when(n);
  for (int i = 0; i < n; ++i) when[visit[i]] = i;
  out.chordal = true;
  for (Vertex v : visit) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbours(v)) {
      if (when[w] < when[v]) earlier.push_back(w);
    }
    out.max_clique = std::max(out.max_clique, static_cast<int>(earlier.size()) + 1);
    if (earlier.empty()) continue;
    Vertex p = *std::max_element(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) { return when[a] < when[b]; });
    for (Vertex x : earlier) {
      if (x != p && !g.has_edge(x, p)) out.chordal = false;
    }
  }
  if (out.chordal) {
    out.peo.assign(visit.rbegin(), visit.rend());
    return out;
  }
  out.max_clique = 0;
  // Some vertex c with non-adjacent neighbours a, b joined by a path avoiding
  // the rest of N[c] closes a chordless cycle.
  for (Vertex c = 0; c < n; ++c) {
    auto nc = g.neighbours(c);
    for (std::size_t i = 0; i < nc.size(); ++i) {
      for (std::size_t j = i + 1; j < nc.size(); ++j) {
        Vertex a = nc[i], b = nc[j];
        if (g.has_edge(a, b)) continue;
        std::vector<char> blocked(n, 0);
        blocked[c] = 1;
        for (Vertex w : nc) blocked[w] = w != a && w != b;
        auto path = shortest_path(g, a, b, blocked);
        if (path.empty()) continue;
        out.witness = {c};
        out.witness.insert(out.witness.end(), path.begin(), path.end());
        return out;
      }
    }
  }
  throw Error("is_chordal: elimination check failed but no chordless cycle found");
}

int exact_treewidth(const Graph& g) {
  const int n = g.order();
  if (n > kTreewidthCap) throw CapExceeded("exact_treewidth: n = " + std::to_string(n) + " exceeds cap 12");
  if (n == 0) return -1;
  std::vector<Mask> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  // q(s, v): vertices outside s+v reachable from v through s.
  auto q = [&](Mask s, int v) {
    Mask seen = Mask{1} << v, frontier = seen, out = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nb[low_bit(f)];
      next &= ~seen;
      seen |= next;
      out |= next & ~s;
      frontier = next & s;
    }
    return bits(out);
  };
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> tw(full + 1, n);
  tw[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    for (Mask f = s; f; f &= f - 1) {
      const int v = low_bit(f);
      const Mask rest = s & ~(Mask{1} << v);
      tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
    }
  }
  return tw[full];
}

int bandwidth_of_ordering(const Graph& g, const VertexOrdering& ord) {
  int width = 0;
  for (auto [u, v] : g.edges()) width = std::max(width, std::abs(ord.rank[u] - ord.rank[v]));
  return width;
}

bool exhaustive_cluster_colourable(const Graph& g, int k, int c) {
  const int n = g.order();
  if (k < 1 || c < 1) throw PreconditionError("exhaustive_cluster_colourable: k and c must be positive");
  double space = 1;
  for (int i = 0; i < n; ++i) space *= k;
  if (space > double(1 << 24)) throw CapExceeded("exhaustive_cluster_colourable: k^n exceeds 2^24");
  std::vector<int> colour(n, 0);
  // Size of v's monochromatic component among coloured vertices.
  auto component = [&](Vertex v) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    int size = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbours(u)) {
        if (!seen[w] && colour[w] == colour[v]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return size;
  };
  std::function<bool(Vertex)> assign = [&](Vertex v) {
    if (v == n) return true;
    for (int col = 1; col <= k; ++col) {
      colour[v] = col;
      if (component(v) <= c && assign(v + 1)) return true;
    }
    colour[v] = 0;
    return false;
  };
  return assign(0);
}

int degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    }
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (Vertex w : g.neighbours(pick)) --deg[w];
  }
  return best;
}

namespace {

/// Calls visit(path) for every simple path from v of length 1..r.
void each_path(const Graph& g, Vertex v, int r, const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{v};
  std::vector<char> on(g.order(), 0);
  on[v] = 1;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(path.size()) > r) return;
    for (Vertex w : g.neighbours(path.back())) {
      if (on[w]) continue;
      path.push_back(w);
      on[w] = 1;
      visit(path);
      extend();
      on[w] = 0;
      path.pop_back();
    }
  };
  extend();
}

void require_small(const Graph& g) {
  if (g.order() > kPathEnumerationCap) throw CapExceeded("path enumeration: n exceeds cap 10");
}

}  // namespace

VertexSet sreach_by_paths(const Graph& g, const VertexOrdering& ord, Vertex v, int r) {
  require_small(g);
  std::set<Vertex> out{v};
  each_path(g, v, r, [&](const std::vector<Vertex>& p) {
    Vertex x = p.back();
    if (ord.rank[x] > ord.rank[v]) return;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (ord.rank[p[i]] <= ord.rank[v]) return;
    }
    out.insert(x);
  });
  return {out.begin(), out.end()};
}

VertexSet wreach_by_paths(const Graph& g, const VertexOrdering& ord, Vertex v, int r) {
  require_small(g);
  std::set<Vertex> out{v};
  each_path(g, v, r, [&](const std::vector<Vertex>& p) {
    Vertex x = p.back();
    if (ord.rank[x] > ord.rank[v]) return;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (ord.rank[p[i]] <= ord.rank[x]) return;
    }
    out.insert(x);
  });
  return {out.begin(), out.end()};
}

}  // namespace improper::oracle
