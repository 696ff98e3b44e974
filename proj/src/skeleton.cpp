#include "improper/skeleton.hpp"

#include <algorithm>
#include <deque>

#include "improper/colouring.hpp"
#include "improper/lexbfs.hpp"

namespace improper {

namespace {

bool terminals_connected(const Graph& g, const VertexSet& a, const VertexMask& mask) {
  auto comp = component_of(g, a.front(), mask);
  return std::all_of(a.begin(), a.end(), [&](Vertex x) { return std::binary_search(comp.begin(), comp.end(), x); });
}

}  // namespace

Skeleton minimal_connected_containing(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> within) {
  if (a.empty()) throw PreconditionError("minimal_connected_containing: empty terminal set");
  VertexSet terminals = sorted_set({a.begin(), a.end()});
  auto mask = mask_of(g.order(), within);
  for (Vertex x : terminals) {
    if (!g.valid(x) || !mask[x]) throw PreconditionError("minimal_connected_containing: terminal outside the vertex set");
  }
  if (!terminals_connected(g, terminals, mask)) {
    throw PreconditionError("minimal_connected_containing: terminals are not connected");
  }

  VertexSet current = component_of(g, terminals.front(), mask);
  auto is_terminal = mask_of(g.order(), terminals);
  bool changed = true;
  while (changed) {
    changed = false;
    mask = mask_of(g.order(), current);
    for (auto it = current.rbegin(); it != current.rend(); ++it) {
      Vertex v = *it;
      if (is_terminal[v] || !mask[v]) continue;
      mask[v] = 0;
      auto comp = component_of(g, terminals.front(), mask);
      if (std::all_of(terminals.begin(), terminals.end(),
                      [&](Vertex x) { return std::binary_search(comp.begin(), comp.end(), x); })) {
        mask = mask_of(g.order(), comp);
        changed = true;
      } else {
        mask[v] = 1;
      }
    }
    current = set_of(mask);
  }
  return Skeleton{std::move(current), std::move(terminals)};
}

Skeleton build_skeleton(const Graph& g, std::span<const Vertex> a, const VertexMask* within) {
  if (a.empty()) throw PreconditionError("build_skeleton: empty terminal set");
  VertexSet terminals = sorted_set({a.begin(), a.end()});
  auto tree = lexbfs_tree(g, terminals.front(), within);
  auto sub = subtree_to(tree, terminals);
  return minimal_connected_containing(g, terminals, sub.vertices);
}

std::vector<int> cluster2colour(const Graph& g, const Skeleton& h) {
  if (h.k() < 2) throw PreconditionError("cluster2colour: needs at least two terminals");

  struct Peel {
    VertexSet removed;
    Vertex cut;
  };
  std::vector<Peel> peels;
  VertexSet current = h.vertices;
  VertexSet terms = h.terminals;

  while (current.size() > terms.size()) {
    auto sub = induced_subgraph(g, current);
    auto bct = block_cut_tree(sub.graph);
    auto leaves = bct.leaf_blocks();
    if (leaves.empty()) break;
    int best = leaves.front();
    for (int b : leaves) {
      if (bct.blocks[b].size() < bct.blocks[best].size()) best = b;
    }
    Vertex cut = sub.to_parent[bct.block_cuts[best].front()];
    Peel peel{{}, cut};
    for (Vertex local : bct.blocks[best]) {
      Vertex v = sub.to_parent[local];
      if (v != cut) peel.removed.push_back(v);
    }
    VertexSet next;
    std::set_difference(current.begin(), current.end(), peel.removed.begin(), peel.removed.end(),
                        std::back_inserter(next));
    VertexSet next_terms;
    std::set_difference(terms.begin(), terms.end(), peel.removed.begin(), peel.removed.end(),
                        std::back_inserter(next_terms));
    next_terms = sorted_set([&] {
      auto v = next_terms;
      v.push_back(cut);
      return v;
    }());
    current = std::move(next);
    terms = std::move(next_terms);
    peels.push_back(std::move(peel));
  }

  // Base: depth parity from min(current) unless splitting in half is better.
  std::vector<int> colour(g.order(), 0);
  auto in_current = mask_of(g.order(), current);
  auto dist = bfs_distances(g, current.front(), &in_current);
  for (Vertex v : current) colour[v] = 1 + dist[v] % 2;
  std::vector<int> split(g.order(), 0);
  const std::size_t half = (current.size() + 1) / 2;
  for (std::size_t i = 0; i < current.size(); ++i) split[current[i]] = i < half ? 1 : 2;
  if (make_colouring(g, split).clustering < make_colouring(g, colour).clustering) colour = std::move(split);
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    for (Vertex v : it->removed) colour[v] = 3 - colour[it->cut];
  }
  return colour;
}

std::vector<int> redblue(const Graph& g, const Skeleton& h) {
  if (h.k() < 2) throw PreconditionError("redblue: needs at least two terminals");
  std::vector<int> colour(g.order(), 0);

  // Terminal removal order, largest id first, down to two terminals.
  std::vector<Skeleton> chain{h};
  while (chain.back().k() > 2) {
    const Skeleton& top = chain.back();
    VertexSet rest(top.terminals.begin(), top.terminals.end() - 1);
    chain.push_back(minimal_connected_containing(g, rest, top.vertices));
  }
  for (Vertex v : chain.back().vertices) colour[v] = kBlue;

  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    const Skeleton& outer = chain[i];
    const Skeleton& inner = chain[i + 1];
    Vertex x = outer.terminals.back();
    if (std::binary_search(inner.vertices.begin(), inner.vertices.end(), x)) continue;

    auto in_outer = mask_of(g.order(), outer.vertices);
    auto in_inner = mask_of(g.order(), inner.vertices);
    std::vector<Vertex> prev(g.order(), -1);
    VertexMask seen(g.order(), 0);
    std::deque<Vertex> queue{x};
    seen[x] = 1;
    Vertex hit = -1;
    while (!queue.empty() && hit == -1) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(u)) {
        if (!in_outer[w] || seen[w]) continue;
        seen[w] = 1;
        prev[w] = u;
        if (in_inner[w]) {
          hit = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (hit == -1) throw Error("redblue: inner skeleton unreachable");
    Vertex v = prev[hit];
    colour[v] = kRed;
    for (Vertex u = prev[v]; u != -1; u = prev[u]) colour[u] = kBlue;
  }
  return colour;
}

}  // namespace improper
