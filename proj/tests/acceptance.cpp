// Acceptance run: one PASS/FAIL line per criterion, with runtime limits.
// Exit status is nonzero when any gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvis/mvis.hpp"
#include "naive_oracle.hpp"

using namespace mvis;

namespace {

struct Log {
  std::vector<std::string> lines;
  bool ok = true;

  template <class... Args>
  void note(const Args&... args) {
    std::ostringstream out;
    (out << ... << args);
    lines.push_back(out.str());
  }
  template <class... Args>
  void fail(const Args&... args) {
    ok = false;
    note("FAIL: ", args...);
  }
  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) fail(what, ": got ", got, ", expected ", want);
  }
};

// Every value solved during the run, keyed by graph name, for the ordering check.
std::map<std::string, std::map<Variant, int>> g_solved;

int solved_value(const Graph& g, Variant v, const SolveOptions& opts = {}) {
  const auto r = solve(g, v, opts);
  if (!classify_set(g, r.witness).holds(v) || r.witness.size() != static_cast<std::size_t>(r.value))
    throw std::runtime_error("invalid witness for " + g.name());
  g_solved[g.name()][v] = r.value;
  return r.value;
}

std::string key(const char* family, int n, int m = 0) {
  return std::string(family) + ":" + std::to_string(n) + (m ? "x" + std::to_string(m) : "");
}

void c1_cycles(Log& log) {
  for (int n = 3; n <= 10; ++n) {
    const Graph g = cycle_graph(n);
    log.expect_eq(solved_value(g, Variant::mutual), 3, key("cycle", n) + " mutual");
    log.expect_eq(solved_value(g, Variant::total), n == 3 ? 3 : n == 4 ? 2 : 0, key("cycle", n) + " total");
    log.expect_eq(solved_value(g, Variant::dual), n <= 4 ? 3 : n <= 6 ? 2 : 0, key("cycle", n) + " dual");
    log.expect_eq(solved_value(g, Variant::outer), n == 3 ? 3 : 2, key("cycle", n) + " outer");
  }
}

void c2_paths_trees(Log& log) {
  for (int n = 2; n <= 10; ++n)
    for (Variant v : kAllVariants) log.expect_eq(solved_value(path_graph(n), v), 2, key("path", n));
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Graph t = random_tree(n, rng());
    const int leaves = static_cast<int>(graph_stats(t).leaf_count);
    for (Variant v : kAllVariants) log.expect_eq(solved_value(t, v), leaves, t.name() + " " + std::string(to_string(v)));
  }
}

void c3_grid_mutual(Log& log) {
  for (int n = 4; n <= 6; ++n)
    for (int m = 4; m <= n; ++m) log.expect_eq(solved_value(grid_graph(n, m), Variant::mutual), 2 * m, key("grid", n, m));
}

void c4_grid_total(Log& log) {
  for (int n = 3; n <= 6; ++n)
    for (int m = 3; m <= n; ++m) log.expect_eq(solved_value(grid_graph(n, m), Variant::total), 4, key("grid", n, m));
  const Graph cube = path_product({3, 3, 3});
  const auto corners = path_product_corners({3, 3, 3});
  if (!classify_set(cube, corners).is_total || corners.size() != 8) log.fail("corner set of P3^3 is not total");
  log.expect_eq(solved_value(cube, Variant::total), 8, std::string("P3^3 total"));
}

void c5_grid_outer(Log& log) {
  const std::map<std::pair<int, int>, int> table{{{2, 2}, 2}, {{3, 2}, 4}, {{3, 3}, 4}, {{4, 3}, 4}, {{4, 4}, 4},
                                                 {{5, 4}, 5}, {{5, 5}, 5}, {{6, 4}, 5}, {{6, 5}, 6}, {{6, 6}, 8},
                                                 {{4, 2}, 4}, {{5, 2}, 4}, {{6, 2}, 4}, {{5, 3}, 5}, {{6, 3}, 5}};
  for (const auto& [nm, want] : table)
    log.expect_eq(solved_value(grid_graph(nm.first, nm.second), Variant::outer), want, key("grid", nm.first, nm.second));
  for (auto [n, m] : std::vector<std::pair<int, int>>{{7, 6}, {9, 6}, {12, 9}, {10, 7}, {10, 6}, {9, 9}}) {
    const auto x = grid_outer_witness(n, m);
    const bool outer = classify_set(grid_graph(n, m), x).is_outer;
    if (!outer || x.size() != static_cast<std::size_t>(m + 2))
      log.fail("constructed outer set for ", key("grid", n, m), " size ", x.size(), outer ? "" : " not outer");
  }
}

void c6_grid_dual(Log& log) {
  log.expect_eq(solved_value(grid_graph(2, 2), Variant::dual), 3, key("grid", 2, 2));
  log.expect_eq(solved_value(grid_graph(3, 3), Variant::dual), 4, key("grid", 3, 3));
  for (int n = 3; n <= 6; ++n) log.expect_eq(solved_value(grid_graph(n, 2), Variant::dual), 4, key("grid", n, 2));
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}})
    log.expect_eq(solved_value(grid_graph(n, m), Variant::dual), 5, key("grid", n, m));
}

void c7_tori_dual(Log& log) {
  const std::vector<std::tuple<int, int, int>> cases{{3, 3, 5}, {4, 3, 5}, {4, 4, 8}, {5, 3, 2}, {5, 4, 4},
                                                     {6, 3, 4}, {6, 4, 4}, {5, 5, 0}, {6, 5, 0}, {6, 6, 0}};
  SolveOptions exhaustive;
  exhaustive.characterization_shortcuts = false;
  exhaustive.time_budget_ms = 15 * 60 * 1000;
  for (const auto& [n, m, want] : cases) {
    try {
      log.expect_eq(solved_value(torus_graph(n, m), Variant::dual, exhaustive), want, key("torus", n, m));
    } catch (const Incomplete& e) {
      log.fail(key("torus", n, m), " incomplete, lower bound ", e.lower_bound());
    }
    if (want > 0 && !classify_set(torus_graph(n, m), torus_witnesses(n, m, Variant::dual)).is_dual)
      log.fail("explicit dual set for ", key("torus", n, m), " is not dual");
  }
  for (int m = 3; m <= 5; ++m) {
    const Graph g = torus_graph(7, m);
    std::vector<VertexSet> layers;
    for (int j = 1; j <= m; ++j) {
      VertexSet layer(g.order());
      for (int i = 1; i <= 7; ++i) layer.insert(grid_vertex(m, i, j));
      layers.push_back(layer);
    }
    if (!dual_zero_by_cover(g, layers)) log.fail("C7 layer cover does not certify ", key("torus", 7, m));
  }
}

void c8_tori_total(Log& log) {
  for (auto [n, m, want] : std::vector<std::tuple<int, int, int>>{{3, 3, 3}, {4, 3, 3}, {4, 4, 4}}) {
    log.expect_eq(solved_value(torus_graph(n, m), Variant::total), want, key("torus", n, m));
    if (!classify_set(torus_graph(n, m), torus_witnesses(n, m, Variant::total)).is_total)
      log.fail("explicit total set for ", key("torus", n, m), " is not total");
  }
  for (int n = 5; n <= 6; ++n)
    for (int m = 5; m <= n; ++m)
      if (!total_is_zero(torus_graph(n, m))) log.fail(key("torus", n, m), " not recognised as total-zero");
  SolveOptions search_only;
  search_only.characterization_shortcuts = false;
  log.expect_eq(solved_value(torus_graph(5, 5), Variant::total, search_only), 0, std::string("torus:5x5 by search"));
}

void c9_tori_outer(Log& log) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {4, 4}, {5, 3}, {5, 4}}) {
    const int v = solved_value(torus_graph(n, m), Variant::outer);
    log.note(key("torus", n, m), " outer = ", v, " (bound ", 2 * m, ")");
    if (v > 2 * m) log.fail(key("torus", n, m), " outer ", v, " exceeds ", 2 * m);
  }
}

void c10_gn(Log& log) {
  for (int n = 2; n <= 4; ++n) {
    const Graph g = gadget_gn(n);
    log.expect_eq(solved_value(g, Variant::mutual), 2 * n, key("gn", n) + " mutual");
    log.expect_eq(solved_value(g, Variant::dual), n + 1, key("gn", n) + " dual");
    log.expect_eq(solved_value(g, Variant::outer), n, key("gn", n) + " outer");
    log.expect_eq(solved_value(g, Variant::total), 0, key("gn", n) + " total");
    for (Variant v : {Variant::mutual, Variant::outer, Variant::dual}) {
      const auto x = gn_witnesses(n, v);
      const auto r = classify_set(g, x);
      if (!r.holds(v)) {
        const auto bad = *r.violation(v);
        log.fail(key("gn", n), " ", to_string(v), " set ", x.to_string(), " does not classify (pair ",
                 g.label(bad.first), ",", g.label(bad.second), ")");
      }
    }
  }
}

void c11_ht(Log& log) {
  const Graph h2 = gadget_ht(2);
  const auto d = ht_witnesses(2, Variant::dual), o = ht_witnesses(2, Variant::outer);
  if (d.size() != 10 || !classify_set(h2, d).is_dual) log.fail("dual set of H2");
  if (o.size() != 8 || !classify_set(h2, o).is_outer) log.fail("outer set of H2");
  SolveOptions budget;
  budget.time_budget_ms = 30 * 60 * 1000;
  try {
    log.expect_eq(solved_value(h2, Variant::dual, budget), 10, std::string("H2 dual"));
    log.expect_eq(solved_value(h2, Variant::outer, budget), 8, std::string("H2 outer"));
  } catch (const Incomplete&) {
    log.note("H2 search incomplete; falling back to the per-copy bound");
    log.expect_eq(solved_value(grid_graph(4, 3), Variant::dual), 5, std::string("P4xP3 dual"));
    log.expect_eq(solved_value(grid_graph(4, 3), Variant::outer), 4, std::string("P4xP3 outer"));
  }
}

void c12_reduction(Log& log) {
  const Graph p3 = path_graph(3);
  const auto red = reduction_gprime(p3, 3);
  log.expect_eq(red.gprime.order(), std::size_t{15}, std::string("order of G'(P3)"));
  const int alpha = solve_independence(p3).value;
  const int want = (static_cast<int>(p3.size()) + 1) * 3 + alpha;
  log.expect_eq(want, 11, std::string("(m+1)t + alpha for P3"));
  for (Variant v : kAllVariants) log.expect_eq(solved_value(red.gprime, v), want, "G'(P3) " + std::string(to_string(v)));

  const Graph p5 = path_graph(5);
  const auto red5 = reduction_gprime(p5, 3);
  const auto ind = solve_independence(p5);
  log.expect_eq(ind.value, 3, std::string("alpha(P5)"));
  log.expect_eq(ind.value, naive::independence_number(p5), std::string("alpha(P5) by enumeration"));
  const auto s = reduction_witness(red5, ind.witness);
  log.expect_eq(s.size(), std::size_t{18}, std::string("|S| for P5"));
  if (!classify_set(red5.gprime, s).is_total) log.fail("S for P5 is not total");
}

void c13_properties(Log& log) {
  std::mt19937_64 rng(1301);
  int hereditary_checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 9), 0.3, rng());
    VertexSet x(g.order());
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
      if (rng() % 2) x.insert(v);
    VertexSet y = x;
    for (Vertex v : x.ids())
      if (rng() % 2) y.erase(v);
    const auto rx = classify_set(g, x), ry = classify_set(g, y);
    for (Variant v : {Variant::mutual, Variant::outer, Variant::total}) {
      if (!rx.holds(v)) continue;
      ++hereditary_checks;
      if (!ry.holds(v)) log.fail("hereditary closure broken on ", g.name(), " ", to_string(v));
    }
  }
  log.note(hereditary_checks, " hereditary checks");

  const Graph c6 = cycle_graph(6);
  if (!classify_set(c6, VertexSet::of(6, {0, 1})).is_dual || classify_set(c6, VertexSet::of(6, {0})).is_dual)
    log.fail("C6 dual counterexample not reproduced");

  int ordered = 0;
  for (const auto& [name, values] : g_solved) {
    auto get = [&](Variant v) { return values.count(v) ? values.at(v) : -1; };
    auto le = [&](Variant a, Variant b) {
      if (get(a) >= 0 && get(b) >= 0 && get(a) > get(b))
        log.fail("ordering ", to_string(a), " <= ", to_string(b), " violated on ", name);
    };
    le(Variant::total, Variant::outer);
    le(Variant::outer, Variant::mutual);
    le(Variant::total, Variant::dual);
    le(Variant::dual, Variant::mutual);
    ++ordered;
  }
  log.note("ordering checked on ", ordered, " solved graphs");

  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_connected_graph(n, 0.1 + 0.1 * (trial % 6), rng());
    const auto d = naive::floyd_warshall(g);
    VertexSet x(g.order());
    std::vector<bool> mask(g.order());
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) {
        x.insert(v);
        mask[static_cast<std::size_t>(v)] = true;
      }
    const auto r = classify_set(g, x);
    for (Variant v : kAllVariants)
      if (r.holds(v) != naive::holds(g, d, mask, v))
        log.fail("classifier disagrees with geodesic enumeration on ", g.name(), " ", x.to_string());
  }
}

void c14_exploratory(Log& log) {
  std::mt19937_64 rng(1401);
  int flagged = 0;
  double max_ratio = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_connected_graph(n, 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng());
    const auto t = comparison_table(g);
    max_ratio = std::max(max_ratio, t.mutual_to_outer);
    if (t.exceeds_twice_outer) {
      ++flagged;
      log.note("*** mu > 2 mu_o on ", g.name(), ": mu=", t.mutual.value, " mu_o=", t.outer.value, " edges:");
      std::ostringstream e;
      for (auto [a, b] : g.edges()) e << " " << a << "-" << b;
      log.note("   ", e.str());
    }
  }
  log.note("100 random graphs, max mu/mu_o = ", max_ratio, ", ", flagged, " with mu > 2 mu_o");
  log.ok = true;  // exploratory, never gating
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  bool gating;
  std::function<void(Log&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "cycles, all four variants, n = 3..10", 1, true, c1_cycles},
      {2, "paths and random trees equal leaf count", 5, true, c2_paths_trees},
      {3, "grid mutual = 2 min(n,m), 4 <= m <= n <= 6", 60, true, c3_grid_mutual},
      {4, "grid total = 4, P3^3 total = 8", 60, true, c4_grid_total},
      {5, "grid outer table and constructed sets", 300, true, c5_grid_outer},
      {6, "grid dual table", 300, true, c6_grid_dual},
      {7, "torus dual table and layer-cover zeros", 900, true, c7_tori_dual},
      {8, "torus total table and zero characterization", 60, true, c8_tori_total},
      {9, "torus outer within 2m", 60, true, c9_tori_outer},
      {10, "gadget G_n values and explicit sets, n = 2..4", 60, true, c10_gn},
      {11, "gadget H_2 dual 10, outer 8", 1800, true, c11_ht},
      {12, "reduction identity on P3, S on P5", 600, true, c12_reduction},
      {13, "property suites", 300, true, c13_properties},
      {14, "mu / mu_o ratio on random graphs (exploratory)", 600, false, c14_exploratory},
  };
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.fail("exception: ", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) log.fail("took ", secs, " s, limit ", c.limit_s, " s");
    if (c.gating) all_ok = all_ok && log.ok;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", log.ok ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& line : log.lines) std::printf("        %s\n", line.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
