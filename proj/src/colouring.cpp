#include "improper/colouring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace improper {

Colouring make_colouring(const Graph& g, std::vector<int> colour) {
  if (static_cast<int>(colour.size()) != g.order()) throw PreconditionError("colouring has the wrong length");
  Colouring out;
  std::set<int> used;
  for (int c : colour) {
    if (c < 0) throw PreconditionError("negative colour");
    if (c > 0) used.insert(c);
  }
  out.num_colours = static_cast<int>(used.size());

  std::vector<int> comp(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] == 0 || comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = s;
    int size = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      int same = 0;
      for (Vertex w : g.neighbours(v)) {
        if (colour[w] != colour[v]) continue;
        ++same;
        if (comp[w] == -1) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
      out.defect = std::max(out.defect, same);
    }
    out.clustering = std::max(out.clustering, size);
  }
  out.colour = std::move(colour);
  return out;
}

std::vector<int> compact_colours(const std::vector<int>& colour) {
  std::map<int, int> relabel;
  std::vector<int> out(colour.size(), 0);
  for (std::size_t v = 0; v < colour.size(); ++v) {
    if (colour[v] == 0) continue;
    auto [it, fresh] = relabel.emplace(colour[v], static_cast<int>(relabel.size()) + 1);
    out[v] = it->second;
  }
  return out;
}

}  // namespace improper
