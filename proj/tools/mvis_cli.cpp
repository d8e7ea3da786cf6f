// mvis: generate graphs, classify vertex sets, compute the four
// mutual-visibility invariants and check them against closed forms.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvis/mvis.hpp"

namespace {

using namespace mvis;

enum Exit { kOk = 0, kDisagree = 1, kUsage = 2, kIncomplete = 3 };

struct Common {
  std::string variant;
  std::uint64_t budget_nodes = 0;
  std::uint64_t budget_ms = 0;
  unsigned parallel = 1;
  bool json = false;
  std::uint64_t seed = 1;

  SolveOptions options() const {
    SolveOptions o;
    o.node_budget = budget_nodes;
    o.time_budget_ms = budget_ms;
    o.parallel = parallel;
    return o;
  }
  std::vector<Variant> variants() const {
    if (variant.empty()) return {kAllVariants.begin(), kAllVariants.end()};
    const auto v = parse_variant(variant);
    if (!v) throw Error(ErrorCode::bad_spec, "unknown variant '" + variant + "'");
    return {*v};
  }
};

// A family spec string or an edge-list path.
Graph load_graph(const std::string& arg) {
  if (looks_like_family_spec(arg)) return generate(parse_family_spec(arg));
  return load_edge_list(arg);
}

// Accepts "0,3,5", "0 3 5" and "(1,1),(2,3)" (labels of product graphs).
VertexSet parse_set(const Graph& g, const std::vector<std::string>& items) {
  std::vector<std::string> tokens;
  for (const auto& item : items) {
    std::string cur;
    int depth = 0;
    for (char c : item) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if ((c == ',' || c == ' ') && depth == 0) {
        if (!cur.empty()) tokens.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }
  VertexSet s(g.order());
  for (const auto& t : tokens) {
    if (g.has_labels()) {
      if (auto v = g.find_label(t)) {
        s.insert(*v);
        continue;
      }
    }
    Vertex v = -1;
    std::istringstream in(t);
    if (!(in >> v) || !in.eof())
      throw Error(ErrorCode::invalid_vertex_id, "'" + t + "' is neither a vertex id nor a vertex label");
    if (!g.valid(v)) throw Error(ErrorCode::invalid_vertex_id, "vertex " + t + " out of range");
    s.insert(v);
  }
  return s;
}

std::string labeled(const Graph& g, const VertexSet& s) {
  if (!g.has_labels()) return s.to_string();
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.ids()) {
    out += (first ? "" : ",") + g.label(v);
    first = false;
  }
  return out + "}";
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
  const Graph g = generate(parse_family_spec(spec));
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, g);
  } else {
    save_edge_list(out_path, g);
    std::cerr << "wrote " << g.order() << " vertices, " << g.size() << " edges to " << out_path << "\n";
  }
  return kOk;
}

int cmd_check(const Common& c, const std::string& graph, const std::vector<std::string>& items) {
  const Graph g = load_graph(graph);
  const VertexSet x = parse_set(g, items);
  const auto report = classify_set(g, x);
  if (c.json) {
    std::cout << to_json(g, x, report).dump(2) << "\n";
    return kOk;
  }
  std::cout << "set " << labeled(g, x) << " (" << x.size() << " vertices)\n";
  for (Variant v : kAllVariants) {
    std::cout << "  " << std::left << std::setw(7) << to_string(v) << (report.holds(v) ? "yes" : "no");
    if (const auto& bad = report.violation(v))
      std::cout << "   first invisible pair " << g.label(bad->first) << " " << g.label(bad->second);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_solve(const Common& c, const std::string& graph) {
  const Graph g = load_graph(graph);
  json out = json::array();
  int status = kOk;
  for (Variant v : c.variants()) {
    try {
      const auto r = solve(g, v, c.options());
      if (c.json) {
        out.push_back(to_json(g, r));
      } else {
        std::cout << to_string(v) << " = " << r.value << "  witness " << labeled(g, r.witness) << "  ["
                  << to_string(r.method) << ", " << r.stats.nodes_explored << " nodes, " << std::fixed
                  << std::setprecision(1) << r.stats.elapsed_ms << " ms]\n";
      }
    } catch (const Incomplete& e) {
      status = kIncomplete;
      if (c.json) {
        json j = error_json(e);
        j["variant"] = to_string(v);
        j["witness"] = set_json(g, e.witness());
        out.push_back(j);
      } else {
        std::cout << to_string(v) << " >= " << e.lower_bound() << "  (incomplete: " << e.what() << ")\n";
      }
    }
  }
  if (c.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return status;
}

int cmd_oracle(const Common& c, const std::string& spec_text) {
  const FamilySpec spec = parse_family_spec(spec_text);
  json out = json::array();
  for (Variant v : c.variants()) {
    const auto o = oracle(spec, v);
    if (c.json) {
      json j = to_json(o);
      j["variant"] = to_string(v);
      j["family"] = to_string(spec);
      out.push_back(j);
      continue;
    }
    std::cout << to_string(v) << ": ";
    switch (o.kind) {
      case OracleKind::exact: std::cout << *o.value; break;
      case OracleKind::upper_bound: std::cout << "<= " << *o.value; break;
      case OracleKind::lower_bound: std::cout << ">= " << *o.value; break;
      case OracleKind::unknown: std::cout << "unknown"; break;
    }
    std::cout << "   (" << o.source << ")\n";
  }
  if (c.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return kOk;
}

int cmd_reduce(const Common& c, const std::string& graph, int t, const std::string& out_path) {
  const Graph base = load_graph(graph);
  const auto red = reduction_gprime(base, t);
  if (!out_path.empty()) save_edge_list(out_path, red.gprime);

  const auto alpha = solve_independence(base, c.options());
  const VertexSet s = reduction_witness(red, alpha.witness);
  const bool s_total = classify_set(red.gprime, s).is_total;
  const int m = static_cast<int>(base.size());
  const int expected = (m + 1) * t + alpha.value;

  json j{{"base_order", base.order()},  {"base_edges", m},
         {"t", t},                      {"gprime_order", red.gprime.order()},
         {"alpha", alpha.value},        {"independent_set", set_json(base, alpha.witness)},
         {"expected", expected},        {"S", set_json(red.gprime, s)},
         {"S_is_total", s_total}};
  int status = s_total && static_cast<int>(s.size()) == expected ? kOk : kDisagree;
  try {
    const auto r = solve(red.gprime, Variant::total, c.options());
    j["total_value"] = r.value;
    j["certified"] = r.value == expected;
    if (r.value != expected) status = kDisagree;
  } catch (const Incomplete& e) {
    j["total_value"] = nullptr;
    j["total_lower_bound"] = e.lower_bound();
    j["certified"] = false;
    if (status == kOk) status = kIncomplete;
  }

  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "G' has " << red.gprime.order() << " vertices, " << red.gprime.size() << " edges";
    if (!out_path.empty()) std::cout << " (written to " << out_path << ")";
    std::cout << "\nalpha(G) = " << alpha.value << ", (m+1)t + alpha = " << expected << "\n";
    std::cout << "S has " << s.size() << " vertices, total: " << (s_total ? "yes" : "no") << "\n";
    if (j["total_value"].is_null())
      std::cout << "mu_t(G') >= " << j["total_lower_bound"] << " (budget exhausted)\n";
    else
      std::cout << "mu_t(G') = " << j["total_value"] << (j["certified"] ? " (certified)" : " (MISMATCH)") << "\n";
  }
  return status;
}

int cmd_verify(const Common& c, const VerifyScope& scope, const std::string& echo) {
  RunReport report = run_verification(scope, c.options(), std::max(1u, c.parallel));
  report.command = echo;
  if (c.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    for (const auto& r : report.records) {
      std::cout << (r.incomplete() ? "INCOMPLETE " : r.agree ? "agree      " : "DISAGREE   ") << std::left
                << std::setw(14) << to_string(r.spec) << std::setw(7) << to_string(r.variant);
      if (r.solved) std::cout << " solved " << std::setw(3) << r.solved->value;
      else std::cout << " >= " << std::setw(6) << *r.lower_bound;
      if (r.oracle.value) std::cout << " oracle " << to_string(r.oracle.kind) << " " << *r.oracle.value;
      else std::cout << " oracle unknown";
      if (!r.note.empty()) std::cout << "  (" << r.note << ")";
      std::cout << "\n";
    }
    std::cout << report.agreements() << " agree, " << report.disagreements() << " disagree, "
              << report.incomplete() << " incomplete\n";
  }
  if (report.disagreements()) return kDisagree;
  if (report.incomplete()) return kIncomplete;
  return kOk;
}

int cmd_compare(const Common& c, const std::string& graph, int random_count, int max_n) {
  std::vector<Graph> graphs;
  if (!graph.empty()) {
    graphs.push_back(load_graph(graph));
  } else {
    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < random_count; ++i) {
      const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
      const double p = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
      graphs.push_back(random_connected_graph(n, p, rng()));
    }
  }
  json out = json::array();
  int flagged = 0;
  bool ordering_ok = true;
  for (const auto& g : graphs) {
    const auto t = comparison_table(g, c.options());
    ordering_ok = ordering_ok && t.ordering_holds;
    flagged += t.exceeds_twice_outer;
    if (c.json) {
      json j{{"graph", g.name()}, {"order", g.order()}, {"size", g.size()}, {"ordering_holds", t.ordering_holds},
             {"mu_over_mu_o", t.mutual_to_outer}, {"exceeds_twice_outer", t.exceeds_twice_outer}};
      for (Variant v : kAllVariants) j[std::string(to_string(v))] = t.get(v).value;
      out.push_back(j);
    } else {
      std::cout << std::left << std::setw(24) << (g.name().empty() ? "graph" : g.name()) << " mu=" << t.mutual.value
                << " mu_t=" << t.total.value << " mu_o=" << t.outer.value << " mu_d=" << t.dual.value
                << " ratio=" << std::fixed << std::setprecision(2) << t.mutual_to_outer
                << (t.ordering_holds ? "" : "  ORDERING VIOLATED")
                << (t.exceeds_twice_outer ? "  *** mu > 2 mu_o ***" : "") << "\n";
    }
  }
  if (c.json) std::cout << out.dump(2) << "\n";
  else if (graphs.size() > 1) std::cout << flagged << " of " << graphs.size() << " graphs with mu > 2 mu_o\n";
  return ordering_ok ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutual-visibility invariants of graphs"};
  app.require_subcommand(1);
  Common c;
  if (const char* env = std::getenv("MVIS_BUDGET_MS")) c.budget_ms = std::strtoull(env, nullptr, 10);

  auto add_common = [&](CLI::App* sub, bool with_variant) {
    if (with_variant)
      sub->add_option("--variant", c.variant, "mutual, total, outer or dual (default: all)")
          ->check(CLI::IsMember({"mutual", "total", "outer", "dual"}));
    sub->add_option("--budget-nodes", c.budget_nodes, "search node budget (0 = unlimited)");
    sub->add_option("--budget-ms", c.budget_ms, "search time budget in ms (default: $MVIS_BUDGET_MS)");
    sub->add_option("--parallel", c.parallel, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_option("--seed", c.seed, "random seed");
  };

  std::string graph, spec, out_path;
  std::vector<std::string> set_items;
  int t = 3;
  int random_count = 100, max_n = 10;
  VerifyScope scope;

  auto* gen = app.add_subcommand("gen", "write a family instance as an edge list");
  gen->add_option("spec", spec, "family spec, e.g. grid:4x3, gn:3, gprime:base.el:t=3")->required();
  gen->add_option("-o,--out", out_path, "output file (default: stdout)");

  auto* check = app.add_subcommand("check", "classify a vertex set under all four variants");
  check->add_option("graph", graph, "family spec or edge-list file")->required();
  check->add_option("set", set_items, "vertex ids or labels such as (1,2)")->expected(0, -1);
  add_common(check, false);

  auto* solve_cmd = app.add_subcommand("solve", "compute invariants exactly");
  solve_cmd->add_option("graph", graph, "family spec or edge-list file")->required();
  add_common(solve_cmd, true);

  auto* oracle_cmd = app.add_subcommand("oracle", "closed-form value for a family instance");
  oracle_cmd->add_option("spec", spec, "family spec")->required();
  add_common(oracle_cmd, true);

  auto* reduce = app.add_subcommand("reduce", "build G' from a base graph and certify its invariant");
  reduce->add_option("graph", graph, "base graph: family spec or edge-list file")->required();
  reduce->add_option("-t", t, "clique parameter (t >= 3)")->check(CLI::Range(3, 64));
  reduce->add_option("-o,--out", out_path, "write G' to this file");
  add_common(reduce, false);

  auto* verify = app.add_subcommand("verify", "check solver, closed forms and constructions on family instances");
  verify->add_option("--max-cycle", scope.max_cycle, "largest cycle");
  verify->add_option("--max-path", scope.max_path, "largest path");
  verify->add_option("--max-grid", scope.max_grid, "largest grid side");
  verify->add_option("--max-torus", scope.max_torus, "largest torus side");
  std::vector<std::string> only;
  verify->add_option("--only", only, "restrict to: cycles paths grids tori gadgets products")->delimiter(',');
  add_common(verify, false);

  auto* compare = app.add_subcommand("compare", "all four invariants side by side (exploratory)");
  compare->add_option("graph", graph, "family spec or edge-list file (default: random graphs)");
  compare->add_option("--count", random_count, "number of random graphs");
  compare->add_option("--max-n", max_n, "largest random graph order")->check(CLI::Range(2, 64));
  add_common(compare, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(spec, out_path);
    if (*check) return cmd_check(c, graph, set_items);
    if (*solve_cmd) return cmd_solve(c, graph);
    if (*oracle_cmd) return cmd_oracle(c, spec);
    if (*reduce) return cmd_reduce(c, graph, t, out_path);
    if (*verify) {
      if (!only.empty()) {
        scope = VerifyScope{false, scope.max_cycle, false, scope.max_path, false, scope.max_grid,
                            false, scope.max_torus, false, false};
        for (const auto& o : only) {
          if (o == "cycles") scope.cycles = true;
          else if (o == "paths") scope.paths = true;
          else if (o == "grids") scope.grids = true;
          else if (o == "tori") scope.tori = true;
          else if (o == "gadgets") scope.gadgets = true;
          else if (o == "products") scope.products = true;
          else throw Error(ErrorCode::bad_spec, "unknown scope '" + o + "'");
        }
      }
      std::string echo;
      for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);
      return cmd_verify(c, scope, echo);
    }
    if (*compare) return cmd_compare(c, graph, random_count, max_n);
  } catch (const Incomplete& e) {
    std::cerr << e.what() << " (best so far " << e.lower_bound() << ")\n";
    return kIncomplete;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
