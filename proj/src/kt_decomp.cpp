#include "improper/kt_decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "improper/lexbfs.hpp"
#include "improper/skeleton.hpp"

namespace improper {

namespace {

/// Indices of parts adjacent to the vertex set `comp`, ascending.
std::vector<int> adjacent_parts(const Graph& g, const VertexSet& comp, const std::vector<int>& owner) {
  std::set<int> out;
  for (Vertex v : comp) {
    for (Vertex w : g.neighbours(v)) {
      if (owner[w] >= 0) out.insert(owner[w]);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

DecompositionOutcome decompose_kt(const Graph& g, int t) {
  if (t < 4) throw PreconditionError("decompose_kt: t must be at least 4");
  const int n = g.order();
  ConnectedPartition p;
  p.width = t - 2;
  std::vector<int> owner(n, -1);

  auto add_part = [&](VertexSet part, VertexSet terminals) {
    for (Vertex v : part) owner[v] = static_cast<int>(p.parts.size());
    PartInfo info;
    info.root = terminals.front();
    info.terminals = std::move(terminals);
    p.parts.push_back(std::move(part));
    p.info.push_back(std::move(info));
  };

  for (Vertex start = 0; start < n;) {
    if (owner[start] >= 0) {
      ++start;
      continue;
    }
    VertexMask rest(n, 0);
    for (Vertex v = 0; v < n; ++v) rest[v] = owner[v] < 0;
    VertexSet comp = component_of(g, start, rest);
    auto q = adjacent_parts(g, comp, owner);
    if (q.empty()) {
      add_part({start}, {start});
      continue;
    }
    if (static_cast<int>(q.size()) > t - 2) throw Error("decompose_kt: width invariant broken");

    VertexSet terminals;
    for (int j : q) {
      for (Vertex v : comp) {
        bool touches = std::any_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                                   [&](Vertex w) { return owner[w] == j; });
        if (touches) {
          terminals.push_back(v);
          break;
        }
      }
    }
    terminals = sorted_set(std::move(terminals));
    VertexSet part;
    if (q.size() == 1 || terminals.size() == 1) {
      part = {terminals.front()};
    } else {
      auto in_comp = mask_of(n, comp);
      part = build_skeleton(g, terminals, &in_comp).vertices;
    }
    const int index = static_cast<int>(p.parts.size());
    add_part(part, terminals);

    if (static_cast<int>(q.size()) == t - 2) {
      VertexMask inner(n, 0);
      for (Vertex v : comp) inner[v] = owner[v] < 0;
      for (const auto& sub : components_within(g, inner)) {
        auto touching = adjacent_parts(g, sub, owner);
        if (static_cast<int>(touching.size()) < t - 1) continue;
        std::vector<VertexSet> branch;
        for (int j : q) branch.push_back(p.parts[j]);
        branch.push_back(p.parts[index]);
        branch.push_back(sub);
        return {std::nullopt, make_model(Pattern::complete(t), std::move(branch))};
      }
    }
  }
  return {std::move(p), std::nullopt};
}

std::optional<KtColourMode> parse_kt_mode(const std::string& name) {
  if (name == "defect") return KtColourMode::defect;
  if (name == "clustered") return KtColourMode::clustered;
  if (name == "paths") return KtColourMode::paths;
  if (name == "independent") return KtColourMode::independent;
  if (name == "treewidth") return KtColourMode::treewidth;
  return std::nullopt;
}

std::string to_string(KtColourMode mode) {
  switch (mode) {
    case KtColourMode::defect:
      return "defect";
    case KtColourMode::clustered:
      return "clustered";
    case KtColourMode::paths:
      return "paths";
    case KtColourMode::independent:
      return "independent";
    case KtColourMode::treewidth:
      return "treewidth";
  }
  return {};
}

namespace {

/// Splits the blue vertices of one part into two alternating classes along
/// each blue path: 0 or 1 per vertex.
std::vector<int> alternate_blue(const Graph& g, const VertexSet& part, const std::vector<int>& rb) {
  std::vector<int> side(g.order(), -1);
  auto blue = [&](Vertex v) { return rb[v] == kBlue; };
  auto blue_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbours(v)) d += (rb[w] == kBlue) ? 1 : 0;
    return d;
  };
  // Start each path at an end (blue degree <= 1), then any leftovers.
  for (int pass = 0; pass < 2; ++pass) {
    for (Vertex s : part) {
      if (!blue(s) || side[s] != -1 || (pass == 0 && blue_degree(s) > 1)) continue;
      side[s] = 0;
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v)) {
          if (blue(w) && side[w] == -1) {
            side[w] = 1 - side[v];
            stack.push_back(w);
          }
        }
      }
    }
  }
  return side;
}

}  // namespace

KtColourOutcome colour_kt(const Graph& g, int t, KtColourMode mode) {
  auto outcome = decompose_kt(g, t);
  if (outcome.certificate) return {std::nullopt, std::move(outcome.certificate), std::nullopt};
  const ConnectedPartition& p = *outcome.partition;

  auto part_colour = greedy_part_colouring(quotient(g, p), p.width);
  std::vector<int> colour(g.order(), 0);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const int pc = part_colour[i];
    const VertexSet& part = p.parts[i];
    Skeleton h{part, p.info[i].terminals};
    const bool trivial = h.k() < 2;
    switch (mode) {
      case KtColourMode::defect:
      case KtColourMode::treewidth:
        for (Vertex v : part) colour[v] = pc;
        break;
      case KtColourMode::clustered: {
        auto c2 = trivial ? std::vector<int>{} : cluster2colour(g, h);
        for (Vertex v : part) colour[v] = 2 * (pc - 1) + (trivial ? 1 : c2[v]);
        break;
      }
      case KtColourMode::paths: {
        auto rb = trivial ? std::vector<int>{} : redblue(g, h);
        for (Vertex v : part) colour[v] = 2 * (pc - 1) + (trivial ? kBlue : rb[v]);
        break;
      }
      case KtColourMode::independent: {
        std::vector<int> rb(g.order(), 0);
        if (trivial) {
          for (Vertex v : part) rb[v] = kBlue;
        } else {
          rb = redblue(g, h);
        }
        auto side = alternate_blue(g, part, rb);
        for (Vertex v : part) colour[v] = 3 * (pc - 1) + (rb[v] == kRed ? 1 : 2 + side[v]);
        break;
      }
    }
  }
  return {make_colouring(g, std::move(colour)), std::nullopt, std::move(outcome.partition)};
}

int part_bandwidth(const Graph& g, const VertexSet& part, const VertexSet& terminals) {
  auto sub = induced_subgraph(g, part);
  Vertex root = terminals.empty() ? 0 : sub.from_parent[terminals.front()];
  auto tree = lexbfs_tree(sub.graph, root);
  auto ord = bandwidth_ordering(sub.graph, tree);
  int width = 0;
  for (auto [u, v] : sub.graph.edges()) width = std::max(width, std::abs(ord.rank[u] - ord.rank[v]));
  return width;
}

}  // namespace improper
