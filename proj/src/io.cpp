#include "improper/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace improper {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto f = fields(line);
    if (f.empty()) continue;
    last_line = line_no;
    long long a = 0, b = 0;
    if (f.size() != 2 || !to_int(f[0], a) || !to_int(f[1], b)) {
      throw ParseError(line_no, n < 0 ? "malformed header, expected \"n m\"" : "malformed edge line, expected \"u v\"");
    }
    if (n < 0) {
      if (a < 0 || b < 0 || a > (1 << 24)) throw ParseError(line_no, "invalid header counts");
      n = a;
      m = b;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex id out of range");
    if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
    }
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, "more edges than declared");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(0, "empty input");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(n, edges);
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, std::string("graph JSON: ") + e.what());
  }
}

Graph read_graph(std::string_view text, const std::string& format) {
  if (format == "edgelist") return parse_edge_list(text);
  if (format == "json") {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(0, "invalid JSON");
    return graph_from_json(j.contains("graph") ? j.at("graph") : j);
  }
  throw PreconditionError("unknown format '" + format + "'");
}

namespace {

std::string kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::none:
      return "none";
    case TreeKind::bfs:
      return "bfs";
    case TreeKind::lexbfs:
      return "lexbfs";
  }
  return "none";
}

TreeKind kind_from(const std::string& s) {
  if (s == "bfs") return TreeKind::bfs;
  if (s == "lexbfs") return TreeKind::lexbfs;
  return TreeKind::none;
}

Json edge_array(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [a, b] : edges) out.push_back({a, b});
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const ConnectedPartition& p) {
  Json j{{"width", p.width}, {"parts", p.parts}};
  if (!p.info.empty()) {
    Json trees = Json::array();
    for (const auto& info : p.info) {
      trees.push_back({{"root", info.root},
                       {"kind", kind_name(info.tree_kind)},
                       {"terminals", info.terminals},
                       {"edges", edge_array(info.tree_edges)},
                       {"leaves", info.leaves},
                       {"pieces", info.pieces}});
    }
    j["trees"] = trees;
  }
  return j;
}

ConnectedPartition partition_from_json(const Json& j) {
  return guarded("partition JSON", [&] {
    ConnectedPartition p;
    p.width = j.at("width").get<int>();
    p.parts = j.at("parts").get<std::vector<VertexSet>>();
    if (j.contains("trees")) {
      for (const auto& t : j.at("trees")) {
        PartInfo info;
        info.root = t.value("root", -1);
        info.tree_kind = kind_from(t.value("kind", "none"));
        info.terminals = t.value("terminals", VertexSet{});
        if (t.contains("edges")) info.tree_edges = edges_from(t.at("edges"));
        info.leaves = t.value("leaves", VertexSet{});
        info.pieces = t.value("pieces", std::vector<std::vector<Vertex>>{});
        p.info.push_back(std::move(info));
      }
    }
    return p;
  });
}

Json to_json(const Colouring& c) {
  return {{"colour", c.colour}, {"num_colours", c.num_colours}, {"defect", c.defect}, {"clustering", c.clustering}};
}

Json to_json(const MinorModel& m) {
  Json params = m.pattern.kind == PatternKind::complete ? Json{{"t", m.pattern.t}}
                                                        : Json{{"s", m.pattern.s}, {"t", m.pattern.t}};
  Json j{{"pattern", m.pattern.name()}, {"params", params}, {"branch_sets", m.branch_sets}};
  if (!m.roles.empty()) j["roles"] = m.roles;
  return j;
}

MinorModel model_from_json(const Json& j) {
  return guarded("model JSON", [&] {
    auto pattern = parse_pattern(j.at("pattern").get<std::string>());
    if (!pattern) throw ParseError(0, "model JSON: unknown pattern " + j.at("pattern").dump());
    return make_model(*pattern, j.at("branch_sets").get<std::vector<VertexSet>>());
  });
}

Json to_json(const LexTree& t) {
  Json parent = Json::array();
  for (Vertex p : t.parent) parent.push_back(p);
  return {{"root", t.root}, {"parent", parent}, {"layers", t.layers}};
}

Json to_json(const CutTree& ct) { return {{"k", ct.k}, {"tree_edges", edge_array(ct.tree_edges)}}; }

CutTree cut_tree_from_json(const Json& j) {
  return guarded("cut tree JSON", [&] { return CutTree{edges_from(j.at("tree_edges")), j.at("k").get<int>()}; });
}

Json to_json(const TPartition& tp) {
  return {{"nodes", tp.nodes},
          {"tree_edges", edge_array(tp.tree_edges)},
          {"bags", tp.bags},
          {"multiplicity", tp.multiplicity}};
}

TPartition tpartition_from_json(const Json& j) {
  return guarded("T-partition JSON", [&] {
    TPartition tp;
    tp.bags = j.at("bags").get<std::vector<VertexSet>>();
    tp.nodes = j.value("nodes", static_cast<int>(tp.bags.size()));
    tp.tree_edges = edges_from(j.at("tree_edges"));
    tp.multiplicity = j.value("multiplicity", 1);
    for (auto& b : tp.bags) b = sorted_set(std::move(b));
    return tp;
  });
}

Json to_json(const LayeredTD& td) {
  return {{"nodes", td.nodes},
          {"tree_edges", edge_array(td.tree_edges)},
          {"bags", td.bags},
          {"layers", td.layers},
          {"layered_width", td.layered_width}};
}

LayeredTD layered_td_from_json(const Json& j) {
  return guarded("layered TD JSON", [&] {
    LayeredTD td;
    td.bags = j.at("bags").get<std::vector<VertexSet>>();
    td.nodes = j.value("nodes", static_cast<int>(td.bags.size()));
    td.tree_edges = edges_from(j.at("tree_edges"));
    td.layers = j.at("layers").get<std::vector<VertexSet>>();
    td.layered_width = j.at("layered_width").get<int>();
    for (auto& b : td.bags) b = sorted_set(std::move(b));
    return td;
  });
}

std::string to_dot(const Graph& g, const std::vector<int>* colour) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v << "\"";
    if (colour && (*colour)[v] > 0) {
      out << ", style=filled, fillcolor=\"/set312/" << ((*colour)[v] - 1) % 12 + 1 << "\"";
    }
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace improper
