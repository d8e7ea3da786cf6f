#include <gtest/gtest.h>

#include <random>

#include "mvis/families.hpp"
#include "mvis/oracles.hpp"
#include "mvis/solver.hpp"
#include "naive_oracle.hpp"

using namespace mvis;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    out.push_back(random_connected_graph(n, 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng()));
  }
  for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
  out.push_back(grid_graph(2, 3));
  out.push_back(grid_graph(2, 4));
  out.push_back(complete_graph(5));
  out.push_back(gadget_gn(2));
  return out;
}

// Replaces every edge by a path with 1 or 2 internal vertices.
Graph random_subdivision(const Graph& base, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  auto next = static_cast<Vertex>(base.order());
  for (auto [a, b] : base.edges()) {
    Vertex prev = a;
    for (int k = 1 + static_cast<int>(rng() % 2); k > 0; --k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, b});
  }
  return build_graph(static_cast<std::size_t>(next), edges);
}

}  // namespace

TEST(Solve, Examples) {
  EXPECT_EQ(solve(cycle_graph(7), Variant::dual).value, 0);
  EXPECT_EQ(solve(grid_graph(5, 4), Variant::outer).value, 5);
  EXPECT_EQ(solve(grid_graph(4, 3), Variant::dual).value, 5);
  EXPECT_EQ(solve(grid_graph(4, 3), Variant::outer).value, 4);
  const Graph t44 = torus_graph(4, 4);
  const auto r = solve(t44, Variant::total);
  EXPECT_EQ(r.value, 4);
  EXPECT_TRUE(classify_set(t44, r.witness).is_total);
}

TEST(Solve, TreesEqualLeafCount) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph t = random_tree(5 + static_cast<int>(seed % 10), seed);
    const auto leaves = static_cast<int>(graph_stats(t).leaf_count);
    for (Variant v : kAllVariants) EXPECT_EQ(solve(t, v).value, leaves) << t.name() << " " << to_string(v);
  }
}

TEST(SolveProperty, MatchesBruteForceAndWitnessIsLexLeast) {
  for (const Graph& g : small_corpus()) {
    for (Variant v : kAllVariants) {
      const auto r = solve(g, v);
      ASSERT_EQ(r.value, naive::brute_force(g, v)) << g.name() << " " << to_string(v);
      ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(r.value));
      EXPECT_TRUE(classify_set(g, r.witness).holds(v));
      EXPECT_EQ(r.witness.ids(), naive::brute_force_witness(g, v)) << g.name() << " " << to_string(v);
    }
  }
}

TEST(SolveProperty, ShortcutsAndFiltersDoNotChangeValues) {
  SolveOptions plain;
  plain.candidate_filter = false;
  plain.characterization_shortcuts = false;
  for (const Graph& g : small_corpus()) {
    for (Variant v : {Variant::total, Variant::dual}) {
      const auto a = solve(g, v);
      const auto b = solve(g, v, plain);
      EXPECT_EQ(a.value, b.value) << g.name();
      EXPECT_EQ(a.witness, b.witness) << g.name();
    }
  }
}

TEST(SolveProperty, OrderingOnEverySolvedInstance) {
  for (const Graph& g : small_corpus()) {
    const auto t = comparison_table(g);
    EXPECT_TRUE(t.ordering_holds) << g.name();
  }
}

TEST(SolveProperty, ParallelResultIsScheduleIndependent) {
  std::vector<Graph> graphs{grid_graph(4, 4), torus_graph(4, 4), gadget_gn(3), gadget_ht(2), grid_graph(5, 3)};
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10; ++i) graphs.push_back(random_connected_graph(11, 0.25, rng()));
  for (const Graph& g : graphs) {
    for (Variant v : kAllVariants) {
      const auto serial = solve(g, v);
      for (unsigned workers : {2u, 4u}) {
        SolveOptions o;
        o.parallel = workers;
        const auto par = solve(g, v, o);
        EXPECT_EQ(par.value, serial.value) << g.name() << " " << to_string(v);
        EXPECT_EQ(par.witness, serial.witness) << g.name() << " " << to_string(v);
      }
    }
  }
}

TEST(SolveProperty, SerialRunsAreReproducible) {
  const Graph g = grid_graph(5, 5);
  for (Variant v : kAllVariants) {
    const auto a = solve(g, v), b = solve(g, v);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.stats.nodes_explored, b.stats.nodes_explored);
  }
}

TEST(Budget, NodeBudgetRaisesIncompleteWithLowerBound) {
  SolveOptions o;
  o.node_budget = 50;
  const Graph g = grid_graph(8, 8);
  try {
    solve(g, Variant::mutual, o);
    FAIL() << "expected Incomplete";
  } catch (const Incomplete& e) {
    EXPECT_EQ(e.code(), ErrorCode::incomplete);
    EXPECT_GE(e.lower_bound(), 1);
    EXPECT_LE(e.lower_bound(), 16);
    EXPECT_TRUE(classify_set(g, e.witness()).is_mutual);
    EXPECT_EQ(e.witness().size(), static_cast<std::size_t>(e.lower_bound()));
  }
}

TEST(Budget, TimeBudgetRaisesIncomplete) {
  SolveOptions o;
  o.time_budget_ms = 1;
  EXPECT_THROW(solve(torus_graph(8, 8), Variant::mutual, o), Incomplete);
}

TEST(Budget, OrderAboveSearchLimitIsRejected) {
  EXPECT_THROW(solve(path_graph(600), Variant::mutual), Error);
}

TEST(Independence, Examples) {
  EXPECT_EQ(solve_independence(path_graph(5)).value, 3);
  EXPECT_EQ(solve_independence(cycle_graph(5)).value, 2);
  EXPECT_EQ(solve_independence(complete_graph(6)).value, 1);
}

TEST(Independence, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 12), 0.3, rng());
    const auto r = solve_independence(g);
    EXPECT_EQ(r.value, naive::independence_number(g));
    for (auto [a, b] : g.edges()) EXPECT_FALSE(r.witness.contains(a) && r.witness.contains(b));
    EXPECT_EQ(r.witness.size(), static_cast<std::size_t>(r.value));
  }
}

TEST(TotalZero, Examples) {
  EXPECT_TRUE(total_is_zero(cycle_graph(5)));
  EXPECT_FALSE(total_is_zero(path_graph(3)));
  EXPECT_TRUE(total_is_zero(torus_graph(5, 5)));
  EXPECT_THROW(total_is_zero(build_graph(1, {})), Error);
}

TEST(TotalZero, AgreesWithSearchOnCorpus) {
  SolveOptions plain;
  plain.characterization_shortcuts = false;
  plain.candidate_filter = false;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 9), 0.35, rng());
    EXPECT_EQ(total_is_zero(g), solve(g, Variant::total, plain).value == 0) << g.name();
  }
}

TEST(DualZero, SufficientConditions) {
  EXPECT_EQ(dual_zero_sufficient(cycle_graph(9)), DualZeroVerdict::proven_zero);
  EXPECT_EQ(dual_zero_sufficient(torus_graph(5, 5)), DualZeroVerdict::inconclusive);
  EXPECT_EQ(dual_zero_sufficient(cycle_graph(6)), DualZeroVerdict::inconclusive);
  EXPECT_EQ(solve(cycle_graph(6), Variant::dual).value, 2);
  EXPECT_EQ(dual_zero_sufficient(torus_graph(7, 7)), DualZeroVerdict::proven_zero);
}

TEST(DualZero, SufficientVerdictIsSound) {
  SolveOptions plain;
  plain.characterization_shortcuts = false;
  std::mt19937_64 rng(23);
  int proven = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph base = random_connected_graph(3 + static_cast<int>(rng() % 3), 0.6, rng());
    if (graph_stats(base).min_degree < 2) continue;
    const Graph g = random_subdivision(base, rng);
    if (dual_zero_sufficient(g) != DualZeroVerdict::proven_zero) continue;
    ++proven;
    EXPECT_EQ(solve(g, Variant::dual, plain).value, 0) << g.name();
  }
  for (int n = 7; n <= 12; ++n) EXPECT_EQ(solve(cycle_graph(n), Variant::dual, plain).value, 0);
  EXPECT_GT(proven, 0);
}

TEST(DualZero, ConvexCover) {
  const Graph t75 = torus_graph(7, 5);
  std::vector<VertexSet> layers;
  for (int j = 1; j <= 5; ++j) {
    VertexSet layer(35);
    for (int i = 1; i <= 7; ++i) layer.insert(grid_vertex(5, i, j));
    layers.push_back(layer);
  }
  EXPECT_TRUE(dual_zero_by_cover(t75, layers));

  const Graph t33 = torus_graph(3, 3);
  std::vector<VertexSet> rows;
  for (int i = 1; i <= 3; ++i) {
    VertexSet row(9);
    for (int j = 1; j <= 3; ++j) row.insert(grid_vertex(3, i, j));
    rows.push_back(row);
  }
  EXPECT_FALSE(dual_zero_by_cover(t33, rows));

  const Graph t55 = torus_graph(5, 5);
  EXPECT_TRUE(dual_zero_by_cover(t55, {VertexSet::full(25)}));

  rows.pop_back();
  try {
    dual_zero_by_cover(t33, rows);
    FAIL() << "expected IncompleteCover";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::incomplete_cover);
  }
}
