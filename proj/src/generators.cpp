#include "improper/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace improper {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below: zero bound");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

int param(const FamilyParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw PreconditionError("missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

Graph grid_graph(int p, int q) {
  require(p >= 1 && q >= 1, "grid: p and q must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < q; ++c) {
      Vertex v = r * q + c;
      if (c + 1 < q) edges.emplace_back(v, v + 1);
      if (r + 1 < p) edges.emplace_back(v, v + q);
    }
  }
  return Graph(p * q, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path: n must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: n must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star: leaf count must be non-negative");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph fan_graph(int n) {
  require(n >= 2, "fan: n must be at least 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph octahedron_graph() {
  // Poles 0 and 5 over the equator 1-2-3-4.
  std::vector<Edge> edges;
  for (int i = 1; i <= 4; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, 5);
    edges.emplace_back(i, i % 4 + 1);
  }
  return Graph(6, edges);
}

Graph maximal_outerplanar(int n, Rng& rng) {
  require(n >= 3, "maximal_outerplanar: n must be at least 3");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<Vertex> outer{0, 1, 2};
  for (Vertex v = 3; v < n; ++v) {
    int i = rng.below(static_cast<int>(outer.size()));
    Vertex a = outer[i];
    Vertex b = outer[(i + 1) % outer.size()];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    outer.insert(outer.begin() + i + 1, v);
  }
  return Graph(n, edges);
}

Graph random_ktree(int n, int k, Rng& rng) {
  require(k >= 1 && k < n, "random_ktree: need 1 <= k < n");
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
  }
  std::vector<std::vector<Vertex>> cliques;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> c;
    for (int i = 0; i <= k; ++i) {
      if (i != skip) c.push_back(i);
    }
    cliques.push_back(std::move(c));
  }
  for (Vertex v = k + 1; v < n; ++v) {
    auto base = cliques[rng.below(static_cast<int>(cliques.size()))];
    for (Vertex u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      auto c = base;
      c[drop] = v;
      cliques.push_back(std::move(c));
    }
  }
  return Graph(n, edges);
}

Graph planar_triangulation(int n, Rng& rng) {
  require(n >= 3, "planar_triangulation: n must be at least 3");
  if (n == 3) return complete_graph(3);
  using Face = std::array<Vertex, 3>;
  std::vector<Face> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::set<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };

  for (Vertex v = 4; v < n; ++v) {
    int f = rng.below(static_cast<int>(faces.size()));
    Face old = faces[f];
    faces[f] = {old[0], old[1], v};
    faces.push_back({old[1], old[2], v});
    faces.push_back({old[0], old[2], v});
    for (Vertex u : old) edges.insert(key(u, v));
  }

  for (int round = 0; round < n; ++round) {
    std::vector<Edge> list(edges.begin(), edges.end());
    Edge e = list[rng.below(static_cast<int>(list.size()))];
    std::vector<int> incident;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const Face& face = faces[f];
      bool has_a = std::find(face.begin(), face.end(), e.first) != face.end();
      bool has_b = std::find(face.begin(), face.end(), e.second) != face.end();
      if (has_a && has_b) incident.push_back(static_cast<int>(f));
    }
    if (incident.size() != 2) continue;
    auto apex = [&](const Face& face) {
      for (Vertex u : face) {
        if (u != e.first && u != e.second) return u;
      }
      return Vertex{-1};
    };
    Vertex c = apex(faces[incident[0]]);
    Vertex d = apex(faces[incident[1]]);
    if (edges.count(key(c, d))) continue;
    edges.erase(e);
    edges.insert(key(c, d));
    faces[incident[0]] = {e.first, c, d};
    faces[incident[1]] = {e.second, c, d};
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Graph random_tree(int n, Rng& rng) {
  require(n >= 1, "random_tree: n must be positive");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
  return Graph(n, edges);
}

Graph random_connected(int n, int extra_edges, Rng& rng) {
  require(n >= 1 && extra_edges >= 0, "random_connected: invalid parameters");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
  for (int i = 0; i < extra_edges && n >= 2; ++i) {
    edges.emplace_back(rng.below(n), rng.below(n));
  }
  return Graph::simplified(n, edges);
}

Graph lowerbound_graph(int s, int c) {
  require(s >= 1 && c >= 1, "lowerbound_Gs: need s >= 1 and c >= 1");
  Graph g = path_graph(c + 1);
  for (int level = 2; level <= s; ++level) {
    const int block = g.order();
    const int n = c * block + 1;
    std::vector<Edge> edges;
    for (int copy = 0; copy < c; ++copy) {
      for (auto [u, v] : g.edges()) edges.emplace_back(copy * block + u, copy * block + v);
    }
    for (Vertex v = 0; v < n - 1; ++v) edges.emplace_back(v, n - 1);
    g = Graph(n, edges);
  }
  return g;
}

Graph generate(const std::string& family, const FamilyParams& params, std::uint64_t seed) {
  Rng rng(seed);
  if (family == "grid") return grid_graph(param(params, "p"), param(params, "q"));
  if (family == "cycle") return cycle_graph(param(params, "n"));
  if (family == "path") return path_graph(param(params, "n"));
  if (family == "complete") return complete_graph(param(params, "n"));
  if (family == "star") return star_graph(param(params, "n"));
  if (family == "fan") return fan_graph(param(params, "n"));
  if (family == "petersen") return petersen_graph();
  if (family == "octahedron") return octahedron_graph();
  if (family == "maximal_outerplanar") return maximal_outerplanar(param(params, "n"), rng);
  if (family == "random_ktree") return random_ktree(param(params, "n"), param(params, "k"), rng);
  if (family == "planar_triangulation") return planar_triangulation(param(params, "n"), rng);
  if (family == "random_tree") return random_tree(param(params, "n"), rng);
  if (family == "random_connected") return random_connected(param(params, "n"), param(params, "m"), rng);
  if (family == "lowerbound_Gs") return lowerbound_graph(param(params, "s"), param(params, "c"));
  throw PreconditionError("unknown graph family '" + family + "'");
}

}  // namespace improper
