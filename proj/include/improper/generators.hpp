#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "improper/graph.hpp"

namespace improper {

/// Seeded generator used by every randomised family.
///
/// Raw output comes from std::mt19937_64, whose sequence is fixed by the
/// C++ standard. Bounded draws use rejection sampling on the raw 64-bit word
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined, so outputs agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }
  /// True with probability num/den.
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

using FamilyParams = std::map<std::string, int>;

/// Deterministic graph families.
///
///   grid(p,q)                 vertex r*q+c
///   cycle(n), path(n), complete(n), star(n) (centre 0, n leaves), fan(n)
///   petersen, octahedron
///   maximal_outerplanar(n)    random, via outer-edge stacking
///   random_ktree(n,k)
///   planar_triangulation(n)   stacked triangulation followed by n random flips
///   random_tree(n), random_connected(n,m) (tree plus m extra edge attempts)
///   lowerbound_Gs(s,c)        path on c+1 vertices, then c copies plus a dominant vertex
///
/// Throws PreconditionError on unknown families or invalid parameters.
[[nodiscard]] Graph generate(const std::string& family, const FamilyParams& params, std::uint64_t seed = 0);

[[nodiscard]] Graph grid_graph(int p, int q);
[[nodiscard]] Graph cycle_graph(int n);
[[nodiscard]] Graph path_graph(int n);
[[nodiscard]] Graph complete_graph(int n);
[[nodiscard]] Graph star_graph(int leaves);
[[nodiscard]] Graph fan_graph(int n);
[[nodiscard]] Graph petersen_graph();
[[nodiscard]] Graph octahedron_graph();
[[nodiscard]] Graph maximal_outerplanar(int n, Rng& rng);
[[nodiscard]] Graph random_ktree(int n, int k, Rng& rng);
[[nodiscard]] Graph planar_triangulation(int n, Rng& rng);
[[nodiscard]] Graph random_tree(int n, Rng& rng);
[[nodiscard]] Graph random_connected(int n, int extra_edges, Rng& rng);
[[nodiscard]] Graph lowerbound_graph(int s, int c);

}  // namespace improper
