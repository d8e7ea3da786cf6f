#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "mvis/detail/search_context.hpp"
#include "mvis/visibility.hpp"

namespace mvis::detail {

/// Budget and incumbent shared by all workers of one search.
struct SharedSearch {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();

  std::atomic<int> best{-1};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> prunes{0};
  std::atomic<bool> exhausted{false};
  // Target mode: lowest task index that produced a solution.
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  void raise_best(int value) {
    int cur = best.load(std::memory_order_relaxed);
    while (value > cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }
};

enum class SearchMode {
  maximize,  // prune subtrees that cannot beat the shared incumbent
  target,    // stop at the first set (in DFS order) of the target size
};

/// Per-worker node accounting; flushes into SharedSearch in batches.
class NodeMeter {
 public:
  explicit NodeMeter(SharedSearch& shared) : shared_(shared) {}
  ~NodeMeter() { flush(); }

  // False once the budget is exhausted.
  bool tick() {
    if (++pending_nodes_ < kBatch) return !shared_.exhausted.load(std::memory_order_relaxed);
    return flush();
  }
  void prune() { ++pending_prunes_; }

  bool flush() {
    const auto total = shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) + pending_nodes_;
    shared_.prunes.fetch_add(pending_prunes_, std::memory_order_relaxed);
    pending_nodes_ = pending_prunes_ = 0;
    if ((shared_.node_budget && total > shared_.node_budget) || std::chrono::steady_clock::now() > shared_.deadline)
      shared_.exhausted.store(true, std::memory_order_relaxed);
    return !shared_.exhausted.load(std::memory_order_relaxed);
  }

 private:
  static constexpr std::uint64_t kBatch = 256;
  SharedSearch& shared_;
  std::uint64_t pending_nodes_ = 0;
  std::uint64_t pending_prunes_ = 0;
};

/// Inclusion search for the hereditary variants (mutual, outer, total).
/// Candidates are kept individually compatible with the current set; a
/// candidate that fails once fails for every superset.
template <std::size_t W>
class HereditarySearch {
 public:
  using Bits = FixedBits<W>;

  struct Task {
    Bits set;
    Bits candidates;
  };

  HereditarySearch(const SearchContext<W>& ctx, Variant variant, SharedSearch& shared, SearchMode mode, int target)
      : ctx_(ctx), variant_(variant), shared_(shared), meter_(shared), mode_(mode), target_(target) {}

  /// Adding w to the valid set x keeps it valid.
  bool extends(const Bits& x, int w) const {
    Bits xw = x;
    xw.set(w);
    const Bits vis_w = ctx_.visible_from(w, xw);
    switch (variant_) {
      case Variant::mutual:
        if (!x.subset_of(vis_w)) return false;
        return affected_visible(x, x, xw, w);
      case Variant::outer:
        if (!ctx_.all.subset_of(vis_w)) return false;
        return affected_visible(x, ctx_.all, xw, w);
      case Variant::total:
        return affected_visible(ctx_.all, ctx_.all, xw, w);
      case Variant::dual:
        break;
    }
    return false;
  }

  Bits initial_candidates(const Bits& allowed) const {
    Bits c;
    allowed.for_each([&](int w) {
      if (extends(Bits{}, w)) c.set(w);
    });
    return c;
  }

  /// Root-level subproblems in DFS order.
  std::vector<Task> split(const Bits& candidates) const {
    std::vector<Task> tasks;
    Bits c = candidates;
    while (c.any()) {
      const int v = c.first();
      c.reset(v);
      Task t;
      t.set.set(v);
      c.for_each([&](int w) {
        if (extends(t.set, w)) t.candidates.set(w);
      });
      tasks.push_back(t);
    }
    return tasks;
  }

  // Returns false when the search stopped early (budget or target reached).
  bool run(const Bits& set, const Bits& candidates) { return expand(set, candidates); }

  int best_size() const { return best_size_; }
  const Bits& best_set() const { return best_set_; }
  bool found() const { return found_; }

 private:
  // Pairs (a, b) with a in `sources`, b in `targets` that pass through w must
  // remain visible once w joins the set.
  bool affected_visible(const Bits& sources, const Bits& targets, const Bits& xw, int w) const {
    bool ok = true;
    sources.for_each([&](int a) {
      if (!ok || a == w) return;
      const Bits aff = ctx_.behind_of(a, w) & targets;
      if (aff.none()) return;
      if (!aff.subset_of(ctx_.visible_from(a, xw))) ok = false;
    });
    return ok;
  }

  int threshold() const {
    return mode_ == SearchMode::target ? target_ - 1 : shared_.best.load(std::memory_order_relaxed);
  }

  bool expand(const Bits& x, Bits cand) {
    if (!meter_.tick()) return false;
    const int size = x.count();
    if (mode_ == SearchMode::maximize && size > best_size_) {
      best_size_ = size;
      best_set_ = x;
      shared_.raise_best(size);
    }
    if (mode_ == SearchMode::target && size >= target_) {
      best_size_ = size;
      best_set_ = x;
      found_ = true;
      return false;
    }
    while (cand.any()) {
      const int limit = threshold();
      if (size + cand.count() <= limit || size + ctx_.path_bound(x, cand) <= limit) {
        meter_.prune();
        return true;
      }
      const int v = cand.first();
      cand.reset(v);
      Bits next = x;
      next.set(v);
      Bits next_cand;
      cand.for_each([&](int w) {
        if (extends(next, w)) next_cand.set(w);
      });
      if (!expand(next, next_cand)) return false;
    }
    return true;
  }

  const SearchContext<W>& ctx_;
  Variant variant_;
  SharedSearch& shared_;
  NodeMeter meter_;
  SearchMode mode_;
  int target_;
  int best_size_ = -1;
  Bits best_set_;
  bool found_ = false;
};

/// Include/exclude search for dual sets. With I decided-in and E decided-out,
/// every final set X contains I, so visibility only shrinks as X grows:
///   - a pair inside I that is not I-visible is fatal,
///   - a pair inside E that is not I-visible is fatal,
///   - an undecided vertex invisible from a member of I must be excluded,
///   - an undecided vertex invisible from a member of E must be included.
/// Propagation runs to a fixpoint before each branch.
template <std::size_t W>
class DualSearch {
 public:
  using Bits = FixedBits<W>;

  struct Task {
    Bits in;
    Bits out;
  };

  DualSearch(const SearchContext<W>& ctx, SharedSearch& shared, SearchMode mode, int target)
      : ctx_(ctx), shared_(shared), meter_(shared), mode_(mode), target_(target),
        rows_(static_cast<std::size_t>(ctx.n)) {}

  bool propagate(Bits& in, Bits& out) {
    bool rows_fresh = false;
    for (;;) {
      if (!rows_fresh) {
        for (int a = 0; a < ctx_.n; ++a) rows_[static_cast<std::size_t>(a)] = ctx_.visible_from(a, in);
        rows_fresh = true;
      }
      bool changed = false;
      bool in_changed = false;
      for (int a = 0; a < ctx_.n; ++a) {
        const bool a_in = in.test(a);
        const bool a_out = out.test(a);
        if (!a_in && !a_out) continue;
        const Bits hidden = minus(ctx_.all, rows_[static_cast<std::size_t>(a)]);
        if (a_in) {
          if (hidden.intersects(in)) return false;
          const Bits forced = minus(minus(hidden, in), out);
          if (forced.any()) {
            out |= forced;
            changed = true;
          }
        } else {
          if (hidden.intersects(out)) return false;
          const Bits forced = minus(minus(hidden, in), out);
          if (forced.any()) {
            in |= forced;
            changed = in_changed = true;
          }
        }
      }
      if (!changed) return true;
      if (in_changed) rows_fresh = false;
    }
  }

  bool is_dual(const Bits& x) const {
    for (int a = 0; a < ctx_.n; ++a) {
      const Bits hidden = minus(ctx_.all, ctx_.visible_from(a, x));
      const Bits& same = x.test(a) ? x : minus(ctx_.all, x);
      if (hidden.intersects(same)) return false;
    }
    return true;
  }

  /// Assignments of the first `depth` undecided vertices, in DFS order.
  std::vector<Task> split(int depth) {
    std::vector<Task> tasks;
    split_rec(Bits{}, Bits{}, depth, tasks);
    return tasks;
  }

  bool run(const Bits& in, const Bits& out) { return expand(in, out); }

  int best_size() const { return best_size_; }
  const Bits& best_set() const { return best_set_; }
  bool found() const { return found_; }

 private:
  void split_rec(Bits in, Bits out, int depth, std::vector<Task>& tasks) {
    if (!propagate(in, out)) return;
    const Bits undecided = minus(minus(ctx_.all, in), out);
    if (depth == 0 || undecided.none()) {
      tasks.push_back({in, out});
      return;
    }
    const int v = undecided.first();
    Bits in2 = in;
    in2.set(v);
    split_rec(in2, out, depth - 1, tasks);
    Bits out2 = out;
    out2.set(v);
    split_rec(in, out2, depth - 1, tasks);
  }

  int threshold() const {
    return mode_ == SearchMode::target ? target_ - 1 : shared_.best.load(std::memory_order_relaxed);
  }

  bool expand(Bits in, Bits out) {
    if (!meter_.tick()) return false;
    if (!propagate(in, out)) {
      meter_.prune();
      return true;
    }
    const Bits undecided = minus(minus(ctx_.all, in), out);
    const int size = in.count();
    const int limit = threshold();
    if (size + undecided.count() <= limit || size + ctx_.path_bound(in, undecided) <= limit) {
      meter_.prune();
      return true;
    }
    if (undecided.none()) {
      if (!is_dual(in)) {
        meter_.prune();
        return true;
      }
      best_size_ = size;
      best_set_ = in;
      if (mode_ == SearchMode::target) {
        found_ = true;
        return false;
      }
      shared_.raise_best(size);
      return true;
    }
    const int v = undecided.first();
    Bits in2 = in;
    in2.set(v);
    if (!expand(in2, out)) return false;
    out.set(v);
    return expand(in, out);
  }

  const SearchContext<W>& ctx_;
  SharedSearch& shared_;
  NodeMeter meter_;
  SearchMode mode_;
  int target_;
  std::vector<Bits> rows_;
  int best_size_ = -1;
  Bits best_set_;
  bool found_ = false;
};

struct KernelOutcome {
  int value = -1;
  VertexSet witness;
  bool complete = true;
};

template <std::size_t W>
struct TaskSolution {
  bool done = false;
  bool found = false;
  int size = -1;
  FixedBits<W> set;
};

// Runs tasks on `workers` threads; `solve_task(i, out)` fills one slot.
template <class Fn>
void run_pool(std::size_t task_count, unsigned workers, Fn&& solve_task) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < task_count; i = next.fetch_add(1)) solve_task(i);
  };
  if (workers <= 1 || task_count <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(workers, task_count); ++k) pool.emplace_back(worker);
}

template <std::size_t W>
KernelOutcome collect(const SearchContext<W>& ctx, const std::vector<TaskSolution<W>>& slots, SharedSearch& shared,
                      SearchMode mode);

/// One search over the context. `allowed` restricts the candidates of the
/// hereditary variants; the dual search always considers every vertex. In
/// maximize mode returns the optimum value and some optimal set; in target
/// mode returns the first set of size `target` in DFS order (lexicographically
/// least when the context uses identity order).
template <std::size_t W>
KernelOutcome run_kernel(const SearchContext<W>& ctx, Variant variant, const FixedBits<W>& allowed,
                         SharedSearch& shared, SearchMode mode, int target, unsigned workers) {
  using Bits = FixedBits<W>;
  KernelOutcome out;

  if (variant != Variant::dual) {
    Bits root_cand;
    {
      HereditarySearch<W> probe(ctx, variant, shared, mode, target);
      root_cand = probe.initial_candidates(allowed);
    }
    if (workers <= 1) {
      HereditarySearch<W> search(ctx, variant, shared, mode, target);
      search.run(Bits{}, root_cand);
      out.complete = !shared.exhausted.load();
      if (mode == SearchMode::target && !search.found()) {
        out.complete = false;
        return out;
      }
      out.value = search.best_size();
      out.witness = ctx.to_original(search.best_set());
      return out;
    }
    std::vector<typename HereditarySearch<W>::Task> tasks;
    {
      HereditarySearch<W> splitter(ctx, variant, shared, mode, target);
      tasks = splitter.split(root_cand);
    }
    // The empty set precedes every task in DFS order.
    if (mode == SearchMode::target && target == 0) {
      out.value = 0;
      out.witness = VertexSet(static_cast<std::size_t>(ctx.n));
      return out;
    }
    shared.raise_best(0);
    std::vector<TaskSolution<W>> slots(tasks.size());
    run_pool(tasks.size(), workers, [&](std::size_t i) {
      if (mode == SearchMode::target && i > shared.first_hit.load()) return;
      HereditarySearch<W> search(ctx, variant, shared, mode, target);
      search.run(tasks[i].set, tasks[i].candidates);
      slots[i] = {true, search.found(), search.best_size(), search.best_set()};
      if (search.found()) {
        std::size_t cur = shared.first_hit.load();
        while (i < cur && !shared.first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    });
    return collect(ctx, slots, shared, mode);
  }

  if (workers <= 1) {
    DualSearch<W> search(ctx, shared, mode, target);
    search.run(Bits{}, Bits{});
    out.complete = !shared.exhausted.load();
    if (mode == SearchMode::target && !search.found()) {
      out.complete = false;
      return out;
    }
    out.value = search.best_size();
    out.witness = ctx.to_original(search.best_set());
    return out;
  }
  std::vector<typename DualSearch<W>::Task> tasks;
  {
    DualSearch<W> splitter(ctx, shared, mode, target);
    int depth = 0;
    while ((1u << depth) < 8 * workers && depth < ctx.n) ++depth;
    tasks = splitter.split(depth);
  }
  std::vector<TaskSolution<W>> slots(tasks.size());
  run_pool(tasks.size(), workers, [&](std::size_t i) {
    if (mode == SearchMode::target && i > shared.first_hit.load()) return;
    DualSearch<W> search(ctx, shared, mode, target);
    search.run(tasks[i].in, tasks[i].out);
    slots[i] = {true, search.found(), search.best_size(), search.best_set()};
    if (search.found()) {
      std::size_t cur = shared.first_hit.load();
      while (i < cur && !shared.first_hit.compare_exchange_weak(cur, i)) {
      }
    }
  });
  return collect(ctx, slots, shared, mode);
}

template <std::size_t W>
KernelOutcome collect(const SearchContext<W>& ctx, const std::vector<TaskSolution<W>>& slots, SharedSearch& shared,
                      SearchMode mode) {
  KernelOutcome out;
  out.complete = !shared.exhausted.load();
  if (mode == SearchMode::target) {
    const std::size_t hit = shared.first_hit.load();
    // Every task before the hit must have finished without a solution.
    if (hit >= slots.size()) {
      out.complete = false;
      return out;
    }
    for (std::size_t i = 0; i < hit; ++i)
      if (!slots[i].done) out.complete = false;
    out.value = slots[hit].size;
    out.witness = ctx.to_original(slots[hit].set);
    return out;
  }
  out.value = 0;
  out.witness = VertexSet(static_cast<std::size_t>(ctx.n));
  for (const auto& s : slots) {
    if (!s.done) continue;
    if (s.size > out.value) {
      out.value = s.size;
      out.witness = ctx.to_original(s.set);
    }
  }
  return out;
}

}  // namespace mvis::detail
