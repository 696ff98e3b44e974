#include "improper/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "improper/bipartite_minor.hpp"
#include "improper/colnums.hpp"
#include "improper/generators.hpp"
#include "improper/immersion.hpp"
#include "improper/io.hpp"
#include "improper/kt_decomp.hpp"
#include "improper/oracles.hpp"

namespace improper::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "edgelist";
  std::string out;
  std::string dot;
  std::uint64_t seed = 0;
  bool timing = false;

  std::string family;
  std::vector<std::string> params;
  std::string variant;
  int t = 0;
  int s = 0;
  int r = 1;
  int k = 0;
  int c = 0;
  std::string mode;
  std::string ordering = "degeneracy";
  std::string structure;
  std::string td;
  std::string certificate;
  std::string pattern;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path, std::istream& in) {
  Json j = Json::parse(read_file(path, in), nullptr, false);
  if (j.is_discarded()) throw ParseError(0, "'" + path + "' is not valid JSON");
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

struct Bound {
  std::string name;
  std::string formula;
  long long claimed;
  long long measured;
  [[nodiscard]] bool pass() const { return measured <= claimed; }
};

/// Report under construction for one run.
struct Report {
  Json body;
  std::vector<Bound> bounds;
  bool certificate = false;
  bool failed = false;  // validation failure beyond the numeric bounds
  std::optional<std::vector<int>> dot_colour;

  [[nodiscard]] bool pass() const {
    if (failed || certificate) return false;
    for (const auto& b : bounds) {
      if (!b.pass()) return false;
    }
    return true;
  }

  Json finish() {
    Json list = Json::array();
    for (const auto& b : bounds) {
      list.push_back({{"name", b.name},
                      {"formula", b.formula},
                      {"claimed", b.claimed},
                      {"measured", b.measured},
                      {"pass", b.pass()}});
    }
    body["bounds"] = list;
    body["pass"] = pass();
    return body;
  }
};

std::string with_t(const std::string& formula, int t) { return formula + " (t=" + std::to_string(t) + ")"; }

void add_certificate(Report& rep, const Graph& g, const MinorModel& m) {
  auto check = oracle::validate_minor_model(g, m);
  rep.certificate = true;
  rep.body["outcome"] = "certificate";
  rep.body["certificate"] = to_json(m);
  rep.body["certificate_valid"] = check.ok;
  if (!check.ok) rep.body["certificate_detail"] = check.detail;
  std::vector<int> colour(g.order(), 0);
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    for (Vertex v : m.branch_sets[i]) colour[v] = static_cast<int>(i) + 1;
  }
  rep.dot_colour = colour;
}

oracle::ColouringMetrics add_colouring(Report& rep, const Graph& g, const Colouring& c) {
  auto m = oracle::validate_colouring(g, c.colour);
  rep.body["outcome"] = "colouring";
  rep.body["colouring"] = to_json(c);
  rep.body["measured"] = {{"num_colours", m.num_colours}, {"defect", m.defect}, {"clustering", m.clustering}};
  rep.dot_colour = c.colour;
  return m;
}

void add_partition(Report& rep, const Graph& g, const ConnectedPartition& p, int declared, const std::string& formula,
                   int t) {
  auto check = validate_partition(g, p);
  rep.body["outcome"] = "partition";
  rep.body["partition"] = to_json(p);
  rep.body["partition_status"] = to_string(check.status);
  if (!check.ok()) {
    rep.failed = true;
    rep.body["partition_detail"] = check.detail;
  }
  rep.bounds.push_back({"width", with_t(formula, t), declared, check.measured_width});
  std::vector<int> colour(g.order(), 0);
  auto owner = p.part_of(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colour[v] = owner[v] + 1;
  rep.dot_colour = colour;
}

int max_leaves(const ConnectedPartition& p) {
  std::size_t best = 0;
  for (const auto& info : p.info) best = std::max(best, info.leaves.size());
  return static_cast<int>(best);
}

void require_t(const Options& o, int min) {
  if (o.t < min) throw UsageError("--t must be at least " + std::to_string(min));
}

Report run_decomp(const Options& o, const Graph& g) {
  Report rep;
  rep.body["params"] = {{"t", o.t}};
  if (o.variant == "kt") {
    require_t(o, 4);
    auto d = decompose_kt(g, o.t);
    if (d.certificate) {
      add_certificate(rep, g, *d.certificate);
      return rep;
    }
    const auto& p = *d.partition;
    add_partition(rep, g, p, o.t - 2, "t-2", o.t);
    auto chordal = oracle::is_chordal(quotient(g, p));
    rep.body["quotient_chordal"] = chordal.chordal;
    if (!chordal.chordal) rep.failed = true;
    rep.bounds.push_back({"quotient_clique", with_t("t-1", o.t), o.t - 1, chordal.max_clique});
    int bandwidth = 0, degree = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      bandwidth = std::max(bandwidth, part_bandwidth(g, p.parts[i], p.info[i].terminals));
      auto sub = induced_subgraph(g, p.parts[i]);
      for (Vertex v = 0; v < sub.graph.order(); ++v) degree = std::max(degree, sub.graph.degree(v));
    }
    rep.bounds.push_back({"part_bandwidth", with_t("t-3", o.t), o.t - 3, bandwidth});
    rep.bounds.push_back({"part_max_degree", with_t("t-2", o.t), o.t - 2, degree});
  } else if (o.variant == "k2t") {
    require_t(o, 1);
    auto d = decompose_k2t(g, o.t);
    if (d.certificate) {
      add_certificate(rep, g, *d.certificate);
      return rep;
    }
    add_partition(rep, g, *d.partition, 1, "1", o.t);
    rep.bounds.push_back({"part_leaves", with_t("t-1", o.t), o.t - 1, max_leaves(*d.partition)});
  } else if (o.variant == "k3t") {
    require_t(o, 1);
    auto d = decompose_k3t(g, o.t);
    if (d.certificate) {
      add_certificate(rep, g, *d.certificate);
      return rep;
    }
    add_partition(rep, g, *d.partition, 2, "2", o.t);
    rep.bounds.push_back({"part_leaves", with_t("2t+1", o.t), 2 * o.t + 1, max_leaves(*d.partition)});
  } else if (o.variant == "kst") {
    if (o.s < 1 || o.t < o.s) throw UsageError("kst needs 1 <= --s <= --t");
    rep.body["params"]["s"] = o.s;
    auto d = decompose_kst(g, o.s, o.t);
    if (d.certificate) {
      add_certificate(rep, g, *d.certificate);
      return rep;
    }
    add_partition(rep, g, *d.partition, o.s, "s", o.t);
    std::size_t pieces = 0;
    for (const auto& info : d.partition->info) pieces = std::max(pieces, info.pieces.size());
    rep.bounds.push_back({"part_paths", "s(t-1)", static_cast<long long>(o.s) * (o.t - 1),
                          static_cast<long long>(pieces)});
  } else {
    throw UsageError("unknown decomposition '" + o.variant + "'");
  }
  return rep;
}

/// Largest monochromatic component among colours selected by `pick`, and the
/// number of selected classes failing `shape`.
std::pair<int, int> class_stats(const Graph& g, const std::vector<int>& colour, bool (*pick)(int),
                                bool oracle::ColourClass::*shape) {
  int largest = 0, bad = 0;
  for (const auto& cls : oracle::colour_class_profile(g, colour)) {
    if (!pick(cls.colour)) continue;
    largest = std::max(largest, cls.max_component);
    if (shape && !(cls.*shape)) ++bad;
  }
  return {largest, bad};
}

Report run_colour(const Options& o, const Graph& g, std::istream& in) {
  Report rep;
  rep.body["params"] = {{"t", o.t}, {"mode", o.mode}};
  const int t = o.t;
  if (o.variant == "kt") {
    require_t(o, 4);
    auto mode = parse_kt_mode(o.mode.empty() ? "defect" : o.mode);
    if (!mode) throw UsageError("unknown kt mode '" + o.mode + "'");
    rep.body["params"]["mode"] = to_string(*mode);
    auto res = colour_kt(g, t, *mode);
    if (res.certificate) {
      add_certificate(rep, g, *res.certificate);
      return rep;
    }
    auto m = add_colouring(rep, g, *res.colouring);
    const auto& colour = res.colouring->colour;
    switch (*mode) {
      case KtColourMode::defect:
        rep.bounds.push_back({"colours", with_t("t-1", t), t - 1, m.num_colours});
        rep.bounds.push_back({"defect", with_t("t-2", t), t - 2, m.defect});
        break;
      case KtColourMode::clustered:
        rep.bounds.push_back({"colours", with_t("2t-2", t), 2 * t - 2, m.num_colours});
        rep.bounds.push_back({"clustering", with_t("ceil((t-2)/2)", t), (t - 1) / 2, m.clustering});
        break;
      case KtColourMode::paths: {
        auto red = class_stats(g, colour, [](int c) { return c % 2 == 0; }, nullptr);
        auto blue = class_stats(g, colour, [](int c) { return c % 2 == 1; }, &oracle::ColourClass::path_forest);
        rep.bounds.push_back({"colours", with_t("2t-2", t), 2 * t - 2, m.num_colours});
        rep.bounds.push_back({"red_clustering", with_t("t-4", t), t - 4, red.first});
        rep.bounds.push_back({"blue_classes_not_paths", "0", 0, blue.second});
        break;
      }
      case KtColourMode::independent: {
        auto red = class_stats(g, colour, [](int c) { return c % 3 == 1; }, nullptr);
        auto blue = class_stats(g, colour, [](int c) { return c % 3 != 1; }, &oracle::ColourClass::independent);
        rep.bounds.push_back({"colours", with_t("3t-3", t), 3 * t - 3, m.num_colours});
        rep.bounds.push_back({"red_clustering", with_t("t-4", t), t - 4, red.first});
        rep.bounds.push_back({"blue_classes_not_independent", "0", 0, blue.second});
        break;
      }
      case KtColourMode::treewidth: {
        // Same-coloured parts are non-adjacent, so components are parts.
        int width = 0;
        for (std::size_t i = 0; i < res.partition->parts.size(); ++i) {
          const auto& part = res.partition->parts[i];
          width = std::max(width, part.size() <= oracle::kTreewidthCap
                                      ? oracle::exact_treewidth(induced_subgraph(g, part).graph)
                                      : part_bandwidth(g, part, res.partition->info[i].terminals));
        }
        rep.bounds.push_back({"colours", with_t("t-1", t), t - 1, m.num_colours});
        rep.bounds.push_back({"component_treewidth", with_t("t-3", t), t - 3, width});
        break;
      }
    }
  } else if (o.variant == "k2t") {
    require_t(o, 1);
    const std::string mode = o.mode.empty() ? "defect" : o.mode;
    rep.body["params"]["mode"] = mode;
    if (mode == "defect") {
      auto res = colour_k2t_defect(g, t);
      if (res.certificate) {
        add_certificate(rep, g, *res.certificate);
        return rep;
      }
      auto m = add_colouring(rep, g, *res.colouring);
      rep.bounds.push_back({"colours", "2", 2, m.num_colours});
      rep.bounds.push_back({"defect", with_t("2(t-1)", t), 2 * (t - 1), m.defect});
    } else if (mode == "three") {
      auto res = three_colour_k2t(g, t);
      if (auto* model = std::get_if<MinorModel>(&res)) {
        add_certificate(rep, g, *model);
        return rep;
      }
      auto colouring = make_colouring(g, std::get<std::vector<int>>(res));
      auto m = add_colouring(rep, g, colouring);
      rep.bounds.push_back({"colours", "3", 3, m.num_colours});
      rep.bounds.push_back({"clustering", with_t("t-1", t), t - 1, m.clustering});
    } else {
      throw UsageError("unknown k2t mode '" + mode + "'");
    }
  } else if (o.variant == "k3t") {
    require_t(o, 1);
    auto mode = parse_k3t_mode(o.mode.empty() ? "defect" : o.mode);
    if (!mode) throw UsageError("unknown k3t mode '" + o.mode + "'");
    rep.body["params"]["mode"] = to_string(*mode);
    auto res = colour_k3t(g, t, *mode);
    if (res.certificate) {
      add_certificate(rep, g, *res.certificate);
      return rep;
    }
    auto m = add_colouring(rep, g, *res.colouring);
    if (*mode == K3tColourMode::defect) {
      rep.bounds.push_back({"colours", "3", 3, m.num_colours});
      rep.bounds.push_back({"defect", with_t("4t+2", t), 4 * t + 2, m.defect});
      rep.body["stated"] = {{"formula", "defect <= 4t"}, {"value", 4 * t}, {"holds", m.defect <= 4 * t}};
    } else if (*mode == K3tColourMode::clustered6) {
      rep.bounds.push_back({"colours", "6", 6, m.num_colours});
      rep.bounds.push_back({"clustering", with_t("2t+1", t), 2 * t + 1, m.clustering});
      rep.body["stated"] = {{"formula", "clustering <= 2t"}, {"value", 2 * t}, {"holds", m.clustering <= 2 * t}};
    } else {
      rep.bounds.push_back({"colours", "6", 6, m.num_colours});
      rep.bounds.push_back({"clustering", with_t("t-1", t), t - 1, m.clustering});
    }
  } else if (o.variant == "cuttree") {
    if (o.structure.empty()) throw UsageError("cuttree needs --structure FILE");
    auto ct = cut_tree_from_json(read_json_file(o.structure, in));
    rep.body["params"] = {{"k", ct.k}};
    auto report = check_cut_tree(g, ct);
    if (!report.ok) {
      rep.failed = true;
      rep.body["outcome"] = "invalid_structure";
      rep.body["detail"] = report.detail;
      return rep;
    }
    auto m = add_colouring(rep, g, tree_cut_2colour(g, ct));
    rep.bounds.push_back({"colours", "2", 2, m.num_colours});
    rep.bounds.push_back({"defect", "k", ct.k, m.defect});
  } else if (o.variant == "tpartition") {
    if (o.structure.empty()) throw UsageError("tpartition needs --structure FILE");
    auto tp = tpartition_from_json(read_json_file(o.structure, in));
    auto stats = tpartition_stats(g, tp);
    rep.body["params"] = {{"adhesion", stats.adhesion}, {"max_bag", stats.max_bag}, {"multiplicity", tp.multiplicity}};
    auto m = add_colouring(rep, g, tpartition_2colour(g, tp));
    rep.bounds.push_back({"colours", "2", 2, m.num_colours});
    rep.bounds.push_back({"defect", "m(a*min(a,b)+b-1)", stats.defect_bound(tp.multiplicity), m.defect});
  } else {
    throw UsageError("unknown colouring '" + o.variant + "'");
  }
  return rep;
}

std::optional<LayeredTD> detect_grid(const Graph& g) {
  const int n = g.order();
  for (int p = 1; p <= n; ++p) {
    if (n % p == 0 && grid_graph(p, n / p) == g) return grid_layered_td(p, n / p);
  }
  return std::nullopt;
}

long long binomial(int a, int b) {
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

Report run_colnum(const Options& o, const Graph& g, std::istream& in) {
  Report rep;
  const int r = o.r;
  if (r < 1) throw UsageError("--r must be at least 1");
  rep.body["params"] = {{"ordering", o.ordering}, {"r", r}};
  rep.body["outcome"] = "metrics";
  const std::string factor = "(2r+1) (r=" + std::to_string(r) + ")";
  VertexOrdering ord;
  std::optional<Bound> scol_bound, wcol_bound;

  auto from_partition = [&](DecompositionOutcome d) -> bool {
    if (d.certificate) {
      add_certificate(rep, g, *d.certificate);
      return false;
    }
    ord = partition_ordering(g, *d.partition);
    return true;
  };

  if (o.ordering == "identity") {
    ord = VertexOrdering::identity(g.order());
  } else if (o.ordering == "degeneracy") {
    ord = degeneracy_ordering(g);
  } else if (o.ordering == "exact") {
    auto s = exact_scol(g, r);
    auto w = exact_wcol(g, r);
    rep.body["scol"] = s.value;
    rep.body["wcol"] = w.value;
    rep.body["scol_witness"] = s.witness.sequence;
    rep.body["wcol_witness"] = w.witness.sequence;
    return rep;
  } else if (o.ordering == "layered") {
    std::optional<LayeredTD> td;
    if (!o.td.empty()) {
      td = layered_td_from_json(read_json_file(o.td, in));
    } else {
      td = detect_grid(g);
      if (!td) throw UsageError("layered ordering needs --td FILE unless the input is a grid");
    }
    auto check = validate_layered_td(g, *td);
    if (!check.ok()) {
      rep.failed = true;
      rep.body["outcome"] = "invalid_structure";
      rep.body["detail"] = to_string(check.status) + ": " + check.detail;
      return rep;
    }
    ord = layered_ordering(g, *td);
    const int k = td->layered_width;
    rep.body["params"]["k"] = k;
    scol_bound = Bound{"scol", "k" + factor, static_cast<long long>(k) * (2 * r + 1), 0};
  } else if (o.ordering == "k2t") {
    require_t(o, 1);
    rep.body["params"]["t"] = o.t;
    if (!from_partition(decompose_k2t(g, o.t))) return rep;
    scol_bound = Bound{"scol", "2(t-1)" + factor, 2LL * (o.t - 1) * (2 * r + 1), 0};
  } else if (o.ordering == "k3t") {
    require_t(o, 1);
    rep.body["params"]["t"] = o.t;
    if (!from_partition(decompose_k3t(g, o.t))) return rep;
    scol_bound = Bound{"scol", "3(2t+1)" + factor, 3LL * (2 * o.t + 1) * (2 * r + 1), 0};
  } else if (o.ordering == "kst") {
    if (o.s < 1 || o.t < o.s) throw UsageError("kst needs 1 <= --s <= --t");
    rep.body["params"]["s"] = o.s;
    rep.body["params"]["t"] = o.t;
    if (!from_partition(decompose_kst(g, o.s, o.t))) return rep;
    const long long st = static_cast<long long>(o.s) * (o.t - 1);
    scol_bound = Bound{"scol", "s(s+1)(t-1)" + factor, st * (o.s + 1) * (2 * r + 1), 0};
    wcol_bound = Bound{"wcol", "s(t-1)C(r+s,s)" + factor, st * binomial(r + o.s, o.s) * (2 * r + 1), 0};
  } else {
    throw UsageError("unknown ordering '" + o.ordering + "'");
  }
  const int s_value = scol(g, ord, r);
  const int w_value = wcol(g, ord, r);
  rep.body["ordering"] = ord.sequence;
  rep.body["scol"] = s_value;
  rep.body["wcol"] = w_value;
  if (scol_bound) {
    scol_bound->measured = s_value;
    rep.bounds.push_back(*scol_bound);
  }
  if (wcol_bound) {
    wcol_bound->measured = w_value;
    rep.bounds.push_back(*wcol_bound);
  }
  return rep;
}

Report run_verify(const Options& o, const Graph& g, std::istream& in) {
  if (o.certificate.empty()) throw UsageError("verify needs --certificate FILE");
  Json j = read_json_file(o.certificate, in);
  Report rep;
  rep.body["outcome"] = "verification";
  auto record = [&](const std::string& kind, bool ok, const std::string& detail) {
    rep.body["kind"] = kind;
    rep.body["valid"] = ok;
    if (!detail.empty()) rep.body["detail"] = detail;
    rep.failed = !ok;
  };
  if (j.contains("certificate") || j.contains("branch_sets")) {
    auto m = model_from_json(j.contains("certificate") ? j.at("certificate") : j);
    auto check = oracle::validate_minor_model(g, m);
    record("certificate", check.ok, check.detail);
    rep.body["pattern"] = m.pattern.name();
  } else if (j.contains("partition") || j.contains("parts")) {
    auto p = partition_from_json(j.contains("partition") ? j.at("partition") : j);
    auto check = validate_partition(g, p);
    record("partition", check.ok(), check.detail);
    rep.body["measured_width"] = check.measured_width;
  } else if (j.contains("colouring") || j.contains("colour")) {
    const Json& c = j.contains("colouring") ? j.at("colouring") : j;
    auto colour = c.at("colour").get<std::vector<int>>();
    if (static_cast<int>(colour.size()) != g.order()) {
      record("colouring", false, "colouring size differs from graph order");
    } else {
      auto m = oracle::validate_colouring(g, colour);
      bool ok = c.value("num_colours", m.num_colours) == m.num_colours && c.value("defect", m.defect) == m.defect &&
                c.value("clustering", m.clustering) == m.clustering;
      record("colouring", ok, ok ? "" : "claimed metrics differ from recomputed ones");
      rep.body["measured"] = {{"num_colours", m.num_colours}, {"defect", m.defect}, {"clustering", m.clustering}};
    }
  } else {
    throw UsageError("certificate file holds no certificate, partition or colouring");
  }
  return rep;
}

Report run_oracle(const Options& o, const Graph& g) {
  Report rep;
  rep.body["outcome"] = "oracle";
  rep.body["kind"] = o.variant;
  if (o.variant == "minor") {
    auto pattern = parse_pattern(o.pattern);
    if (!pattern) throw UsageError("unknown pattern '" + o.pattern + "'");
    auto m = oracle::has_minor(g, *pattern);
    rep.body["pattern"] = pattern->name();
    rep.body["found"] = m.has_value();
    if (m) rep.body["model"] = to_json(*m);
  } else if (o.variant == "chordal") {
    auto c = oracle::is_chordal(g);
    rep.body["chordal"] = c.chordal;
    if (c.chordal) {
      rep.body["peo"] = c.peo;
      rep.body["max_clique"] = c.max_clique;
    } else {
      rep.body["witness"] = c.witness;
    }
  } else if (o.variant == "treewidth") {
    rep.body["treewidth"] = oracle::exact_treewidth(g);
  } else if (o.variant == "degeneracy") {
    rep.body["degeneracy"] = oracle::degeneracy(g);
  } else if (o.variant == "cluster") {
    rep.body["k"] = o.k;
    rep.body["c"] = o.c;
    rep.body["colourable"] = oracle::exhaustive_cluster_colourable(g, o.k, o.c);
  } else {
    throw UsageError("unknown oracle '" + o.variant + "'");
  }
  return rep;
}

FamilyParams parse_params(const std::vector<std::string>& items) {
  FamilyParams params;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + item + "'");
    try {
      params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--param value is not an integer: '" + item + "'");
    }
  }
  return params;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decompositions, improper colourings and certificates for minor-free graphs", "improper"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  auto global = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };
  app.add_option("--input", o.input, "Graph file, - for stdin");
  app.add_option("--format", o.format, "Input format")->check(CLI::IsMember({"edgelist", "json"}));
  app.add_option("--seed", o.seed, "Generator seed");
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--dot", o.dot, "Write a DOT drawing of the result");
  app.add_flag("--timing", o.timing, "Add wall-clock time to reports");

  auto* gen = global(app.add_subcommand("gen", "Generate a graph"));
  gen->add_option("family", o.family, "Graph family")->required();
  gen->add_option("--param", o.params, "Family parameter key=value");

  auto* decomp = global(app.add_subcommand("decomp", "Connected partition or minor certificate"));
  decomp->add_option("variant", o.variant)->required()->check(CLI::IsMember({"kt", "k2t", "k3t", "kst"}));
  decomp->add_option("--t", o.t)->required();
  decomp->add_option("--s", o.s);

  auto* colour = global(app.add_subcommand("colour", "Improper colouring or minor certificate"));
  colour->add_option("variant", o.variant)
      ->required()
      ->check(CLI::IsMember({"kt", "k2t", "k3t", "cuttree", "tpartition"}));
  colour->add_option("--t", o.t);
  colour->add_option("--mode", o.mode);
  colour->add_option("--structure", o.structure, "CutTree or T-partition JSON");

  auto* colnum = global(app.add_subcommand("colnum", "Strong and weak colouring numbers of an ordering"));
  colnum->add_option("--ordering", o.ordering)
      ->check(CLI::IsMember({"identity", "degeneracy", "exact", "layered", "k2t", "k3t", "kst"}));
  colnum->add_option("--r", o.r);
  colnum->add_option("--t", o.t);
  colnum->add_option("--s", o.s);
  colnum->add_option("--td", o.td, "Layered tree decomposition JSON");

  auto* verify = global(app.add_subcommand("verify", "Re-check a certificate, partition or colouring"));
  verify->add_option("--certificate", o.certificate)->required();

  auto* orc = global(app.add_subcommand("oracle", "Run a brute-force oracle"));
  orc->add_option("kind", o.variant)
      ->required()
      ->check(CLI::IsMember({"minor", "chordal", "treewidth", "degeneracy", "cluster"}));
  orc->add_option("--pattern", o.pattern);
  orc->add_option("--k", o.k);
  orc->add_option("--c", o.c);

  std::vector<std::string> argv_store{"improper"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out.empty()) {
      file.open(o.out);
      if (!file) throw UsageError("cannot write '" + o.out + "'");
      sink = &file;
    }

    if (gen->parsed()) {
      Graph g = generate(o.family, parse_params(o.params), o.seed);
      *sink << (o.format == "json" ? to_json(g).dump() + "\n" : to_edge_list(g));
      if (!o.dot.empty()) write_file(o.dot, to_dot(g));
      return kExitPass;
    }

    Graph g = read_graph(read_file(o.input, in), o.format);
    Report rep;
    std::string op;
    if (decomp->parsed()) {
      op = "decomp";
      rep = run_decomp(o, g);
    } else if (colour->parsed()) {
      op = "colour";
      rep = run_colour(o, g, in);
    } else if (colnum->parsed()) {
      op = "colnum";
      rep = run_colnum(o, g, in);
    } else if (verify->parsed()) {
      op = "verify";
      rep = run_verify(o, g, in);
    } else {
      op = "oracle";
      rep = run_oracle(o, g);
    }
    Json head{{"op", op}};
    if (!o.variant.empty()) head["variant"] = o.variant;
    head["input"] = {{"source", o.input}, {"n", g.order()}, {"m", g.size()}};
    Json body = rep.finish();
    for (auto& [key, value] : body.items()) head[key] = value;
    if (o.timing) {
      head["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    *sink << head.dump() << "\n";
    if (!o.dot.empty()) write_file(o.dot, to_dot(g, rep.dot_colour ? &*rep.dot_colour : nullptr));
    return rep.pass() ? kExitPass : kExitViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace improper::cli
