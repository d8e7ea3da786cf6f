#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "mvis/detail/search_kernels.hpp"
#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

struct SolveOptions {
  std::uint64_t node_budget = 0;     // 0 = unlimited
  std::uint64_t time_budget_ms = 0;  // 0 = unlimited
  bool candidate_filter = true;      // restrict total-variant candidates to bypass vertices
  bool characterization_shortcuts = true;
  unsigned parallel = 1;
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes = 0;
  double elapsed_ms = 0.0;
};

enum class SolveMethod { search, characterization, oracle_assisted };

inline std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::search: return "search";
    case SolveMethod::characterization: return "characterization";
    case SolveMethod::oracle_assisted: return "oracle-assisted";
  }
  return "?";
}

struct SolveResult {
  Variant variant = Variant::mutual;
  int value = 0;
  VertexSet witness;  // lexicographically least maximum set
  SolveStats stats;
  SolveMethod method = SolveMethod::search;
};

/// Maximum independent set; `value` is α(G).
struct IndependenceResult {
  int value = 0;
  VertexSet witness;
  SolveStats stats;
};

/// Budget exhausted. Carries the best set found so far, which is only a lower
/// bound on the optimum.
class Incomplete : public Error {
 public:
  Incomplete(const std::string& what, int lower_bound, VertexSet witness, SolveStats stats)
      : Error(ErrorCode::incomplete, what),
        lower_bound_(lower_bound),
        witness_(std::move(witness)),
        stats_(stats) {}

  int lower_bound() const { return lower_bound_; }
  const VertexSet& witness() const { return witness_; }
  const SolveStats& stats() const { return stats_; }

 private:
  int lower_bound_;
  VertexSet witness_;
  SolveStats stats_;
};

inline constexpr std::size_t kMaxSearchOrder = 512;

/// μ_t(G) = 0 iff every vertex is the middle vertex of a convex P3.
inline bool total_is_zero(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::too_small, "characterization needs at least two vertices");
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
    if (is_bypass_candidate(g, v)) return false;
  return true;
}

enum class DualZeroVerdict { proven_zero, inconclusive };

inline std::string_view to_string(DualZeroVerdict v) {
  return v == DualZeroVerdict::proven_zero ? "proven_zero" : "inconclusive";
}

/// Sufficient conditions for μ_d(G) = 0: every edge is the center of a convex
/// P4, or girth >= 7 with minimum degree >= 2.
inline DualZeroVerdict dual_zero_sufficient(const Graph& g) {
  if (g.order() < 2) return DualZeroVerdict::inconclusive;
  const auto st = graph_stats(g);
  if (st.girth && *st.girth >= 7 && st.min_degree >= 2) return DualZeroVerdict::proven_zero;

  const auto& d = g.distances();
  for (auto [u, u2] : g.edges()) {
    bool centered = false;
    for (Vertex w : g.neighbors(u)) {
      if (w == u2 || centered) continue;
      for (Vertex w2 : g.neighbors(u2)) {
        if (w2 == u || d(w, w2) != 3) continue;
        // w-u-u2-w2 is convex iff it is the only w,w2-geodesic.
        int interval_size = 0;
        for (Vertex z = 0; z < static_cast<Vertex>(g.order()); ++z)
          if (d(w, z) + d(z, w2) == 3) ++interval_size;
        if (interval_size == 4) {
          centered = true;
          break;
        }
      }
    }
    if (!centered) return DualZeroVerdict::inconclusive;
  }
  return DualZeroVerdict::proven_zero;
}

namespace detail {

inline std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

inline std::vector<Vertex> identity_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <std::size_t W>
SolveResult solve_with(const Graph& g, Variant variant, const SolveOptions& opts, const VertexSet& allowed_set) {
  const auto t0 = std::chrono::steady_clock::now();
  SharedSearch shared;
  shared.node_budget = opts.node_budget;
  if (opts.time_budget_ms)
    shared.deadline = t0 + std::chrono::milliseconds(opts.time_budget_ms);
  const unsigned workers = std::max(1u, opts.parallel);

  auto stats = [&] {
    return SolveStats{shared.nodes.load(), shared.prunes.load(), ms_since(t0)};
  };

  // Optimum value under the degree ordering.
  const SearchContext<W> ranked(g, degree_order(g));
  const auto phase1 = run_kernel<W>(ranked, variant, ranked.from_original(allowed_set), shared,
                                    SearchMode::maximize, 0, workers);
  if (!phase1.complete) {
    throw Incomplete("search budget exhausted during optimization", std::max(phase1.value, 0),
                     phase1.witness.capacity() ? phase1.witness : g.empty_set(), stats());
  }

  SolveResult result;
  result.variant = variant;
  result.value = phase1.value;
  result.method = SolveMethod::search;

  // Canonical witness: first set of the optimal size in ascending-id DFS order.
  if (phase1.value == 0) {
    result.witness = g.empty_set();
  } else {
    const SearchContext<W> plain(g, identity_order(g));
    const auto phase2 = run_kernel<W>(plain, variant, plain.from_original(allowed_set), shared, SearchMode::target,
                                      phase1.value, workers);
    if (!phase2.complete)
      throw Incomplete("search budget exhausted while canonicalizing the witness", phase1.value, phase1.witness,
                       stats());
    result.witness = phase2.witness;
  }
  result.stats = stats();
  return result;
}

template <std::size_t W>
IndependenceResult independence_with(const Graph& g, const SolveOptions& opts);

inline void check_search_size(const Graph& g) {
  if (g.order() > kMaxSearchOrder)
    throw Error(ErrorCode::bad_params, "exact search supports at most " + std::to_string(kMaxSearchOrder) +
                                           " vertices, got " + std::to_string(g.order()));
}

}  // namespace detail

/// Exact μ, μ_t, μ_o or μ_d with a lexicographically least maximum witness.
inline SolveResult solve(const Graph& g, Variant variant, const SolveOptions& opts = {}) {
  detail::check_search_size(g);
  const auto t0 = std::chrono::steady_clock::now();

  VertexSet allowed = VertexSet::full(g.order());
  if (variant == Variant::total && g.order() >= 2) {
    if (opts.candidate_filter) {
      for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        if (!is_bypass_candidate(g, v)) allowed.erase(v);
    }
    if (opts.characterization_shortcuts && total_is_zero(g)) {
      return {variant, 0, g.empty_set(), {0, 0, detail::ms_since(t0)}, SolveMethod::characterization};
    }
  }
  if (variant == Variant::dual && opts.characterization_shortcuts &&
      dual_zero_sufficient(g) == DualZeroVerdict::proven_zero) {
    return {variant, 0, g.empty_set(), {0, 0, detail::ms_since(t0)}, SolveMethod::characterization};
  }

  const std::size_t words = (g.order() + 63) / 64;
  if (words <= 1) return detail::solve_with<1>(g, variant, opts, allowed);
  if (words <= 2) return detail::solve_with<2>(g, variant, opts, allowed);
  if (words <= 4) return detail::solve_with<4>(g, variant, opts, allowed);
  return detail::solve_with<8>(g, variant, opts, allowed);
}

namespace detail {

// Maximum clique in the complement with greedy-coloring bounds.
template <std::size_t W>
class IndependenceSearch {
 public:
  using Bits = FixedBits<W>;

  IndependenceSearch(const Graph& g, SharedSearch& shared) : n_(static_cast<int>(g.order())), meter_(shared) {
    non_adj_.assign(static_cast<std::size_t>(n_), Bits{});
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && !g.has_edge(u, v)) non_adj_[static_cast<std::size_t>(u)].set(v);
  }

  bool run() {
    Bits all;
    for (int v = 0; v < n_; ++v) all.set(v);
    return expand(Bits{}, all);
  }

  int best_size() const { return best_size_; }
  const Bits& best_set() const { return best_; }

 private:
  bool expand(const Bits& chosen, Bits cand) {
    if (!meter_.tick()) return false;
    const int size = chosen.count();
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
    }
    // Color classes are independent in the complement, i.e. cliques in G.
    std::vector<int> verts, colors;
    Bits uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits avail = uncolored;
      while (avail.any()) {
        const int v = avail.first();
        avail.reset(v);
        avail.subtract(non_adj_[static_cast<std::size_t>(v)]);
        uncolored.reset(v);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (size + colors[i] <= best_size_) {
        meter_.prune();
        return true;
      }
      const int v = verts[i];
      Bits next = chosen;
      next.set(v);
      if (!expand(next, cand & non_adj_[static_cast<std::size_t>(v)])) return false;
      cand.reset(v);
    }
    return true;
  }

  int n_;
  NodeMeter meter_;
  std::vector<Bits> non_adj_;
  int best_size_ = 0;
  Bits best_;
};

template <std::size_t W>
IndependenceResult independence_with(const Graph& g, const SolveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  SharedSearch shared;
  shared.node_budget = opts.node_budget;
  if (opts.time_budget_ms) shared.deadline = t0 + std::chrono::milliseconds(opts.time_budget_ms);
  IndependenceResult r;
  int size = 0;
  FixedBits<W> best;
  {
    IndependenceSearch<W> search(g, shared);
    search.run();
    size = search.best_size();
    best = search.best_set();
  }
  VertexSet witness(g.order());
  best.for_each([&](int v) { witness.insert(v); });
  const SolveStats stats{shared.nodes.load(), shared.prunes.load(), ms_since(t0)};
  if (shared.exhausted.load()) throw Incomplete("independence search budget exhausted", size, witness, stats);
  return {size, witness, stats};
}

}  // namespace detail

/// Exact independence number α(G) by branch and bound.
inline IndependenceResult solve_independence(const Graph& g, const SolveOptions& opts = {}) {
  detail::check_search_size(g);
  const std::size_t words = (g.order() + 63) / 64;
  if (words <= 1) return detail::independence_with<1>(g, opts);
  if (words <= 2) return detail::independence_with<2>(g, opts);
  if (words <= 4) return detail::independence_with<4>(g, opts);
  return detail::independence_with<8>(g, opts);
}

/// Certifies μ_d(G) = 0 from a cover of V(G) by convex parts whose induced
/// subgraphs have μ_d = 0. False means the certificate does not apply.
inline bool dual_zero_by_cover(const Graph& g, const std::vector<VertexSet>& cover, const SolveOptions& opts = {}) {
  VertexSet covered(g.order());
  for (const auto& part : cover) {
    if (part.capacity() != g.order()) throw Error(ErrorCode::invalid_vertex_id, "cover part has wrong capacity");
    for (Vertex v : part.ids()) covered.insert(v);
  }
  if (covered.size() != g.order())
    throw Error(ErrorCode::incomplete_cover,
                std::to_string(g.order() - covered.size()) + " vertices not covered");

  for (const auto& part : cover) {
    if (part.empty() || !is_convex(g, part)) return false;
    const auto [sub, back] = induced_subgraph(g, part);
    const auto st = graph_stats(sub);
    // Induced cycles of length >= 7 have μ_d = 0.
    const bool long_cycle = sub.order() >= 7 && sub.size() == sub.order() && st.min_degree == 2 && st.girth &&
                            *st.girth == sub.order();
    if (long_cycle) continue;
    if (dual_zero_sufficient(sub) == DualZeroVerdict::proven_zero) continue;
    if (solve(sub, Variant::dual, opts).value != 0) return false;
  }
  return true;
}

}  // namespace mvis
