#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mvis/bits.hpp"
#include "mvis/graph.hpp"

namespace mvis::detail {

/// Graph data relabeled into branching order, as fixed-width bitsets.
/// Rank r corresponds to original vertex order[r].
template <std::size_t W>
struct SearchContext {
  using Bits = FixedBits<W>;

  int n = 0;
  int diameter = 0;
  std::vector<Vertex> order;   // rank -> original id
  std::vector<int> rank_of;    // original id -> rank
  std::vector<Bits> adj;
  std::vector<Distance> dist;  // n*n
  std::vector<Bits> sphere;    // sphere[a*(diameter+1)+k] = { z : d(a,z) = k }
  std::vector<Bits> behind;    // behind[a*n+w] = { b != w : w on some a,b-geodesic }, empty for w == a
  std::vector<Bits> convex_paths;
  Bits all;

  SearchContext(const Graph& g, std::vector<Vertex> rank_order) : order(std::move(rank_order)) {
    n = static_cast<int>(g.order());
    rank_of.assign(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) rank_of[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    const auto& gd = g.distances();

    adj.assign(static_cast<std::size_t>(n), Bits{});
    dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      all.set(a);
      const Vertex va = order[static_cast<std::size_t>(a)];
      for (Vertex w : g.neighbors(va)) adj[static_cast<std::size_t>(a)].set(rank_of[static_cast<std::size_t>(w)]);
      for (int b = 0; b < n; ++b) {
        const Distance d = gd(va, order[static_cast<std::size_t>(b)]);
        dist[idx(a, b)] = d;
        diameter = std::max<int>(diameter, d);
      }
    }

    const auto stride = static_cast<std::size_t>(diameter + 1);
    sphere.assign(static_cast<std::size_t>(n) * stride, Bits{});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sphere[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(d(a, b))].set(b);

    behind.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Bits{});
    for (int a = 0; a < n; ++a)
      for (int w = 0; w < n; ++w) {
        if (w == a) continue;
        Bits& out = behind[idx(a, w)];
        for (int b = 0; b < n; ++b)
          if (b != w && d(a, w) + d(w, b) == d(a, b)) out.set(b);
      }

    build_convex_paths();
  }

  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b); }
  int d(int a, int b) const { return dist[idx(a, b)]; }
  const Bits& sph(int a, int k) const {
    return sphere[static_cast<std::size_t>(a) * static_cast<std::size_t>(diameter + 1) + static_cast<std::size_t>(k)];
  }
  const Bits& behind_of(int a, int w) const { return behind[idx(a, w)]; }

  Bits neighborhood(const Bits& f) const {
    Bits out;
    f.for_each([&](int v) { out |= adj[static_cast<std::size_t>(v)]; });
    return out;
  }

  /// { v : a and v are x-visible }, layer by layer along distance spheres.
  Bits visible_from(int a, const Bits& x) const {
    Bits vis;
    vis.set(a);
    Bits frontier;
    frontier.set(a);
    for (int k = 1; k <= diameter; ++k) {
      Bits reached = neighborhood(frontier) & sph(a, k);
      if (reached.none()) break;
      vis |= reached;
      frontier = minus(reached, x);
      if (frontier.none()) break;
    }
    return vis;
  }

  Bits from_original(const VertexSet& s) const {
    Bits b;
    for (Vertex v : s.ids()) b.set(rank_of[static_cast<std::size_t>(v)]);
    return b;
  }
  VertexSet to_original(const Bits& b) const {
    VertexSet s(static_cast<std::size_t>(n));
    b.for_each([&](int r) { s.insert(order[static_cast<std::size_t>(r)]); });
    return s;
  }

  /// Additional members that can join `x` from `cand`, bounded by covering the
  /// candidates with convex paths; a convex path holds at most two members of
  /// any set of the four kinds.
  int path_bound(const Bits& x, const Bits& cand) const {
    Bits rest = cand;
    int bound = 0;
    while (rest.any()) {
      int best_saving = 0;
      int best_gain = 0;
      const Bits* best_path = nullptr;
      for (const Bits& p : convex_paths) {
        const int cover = rest.count_and(p);
        if (cover <= 1) continue;
        const int cap = std::max(0, 2 - x.count_and(p));
        const int gain = std::min(cap, cover);
        if (cover - gain > best_saving) {
          best_saving = cover - gain;
          best_gain = gain;
          best_path = &p;
        }
      }
      if (!best_path) {
        bound += rest.count();
        break;
      }
      bound += best_gain;
      rest.subtract(*best_path);
    }
    return bound;
  }

 private:
  // Maximal unique geodesics. A unique geodesic is convex: a second geodesic
  // between two of its vertices would splice into a second geodesic overall.
  void build_convex_paths() {
    std::vector<char> unique(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        int count = 0;
        for (int z = 0; z < n; ++z)
          if (d(a, z) + d(z, b) == d(a, b)) ++count;
        unique[idx(a, b)] = count == d(a, b) + 1;
      }
    auto extendable = [&](int a, int b) {
      // some neighbor a' of a extends the geodesic beyond a and stays unique
      bool ext = false;
      adj[static_cast<std::size_t>(a)].for_each([&](int a2) {
        if (!ext && d(a2, b) == d(a, b) + 1 && unique[idx(a2, b)]) ext = true;
      });
      return ext;
    };
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (d(a, b) < 2 || !unique[idx(a, b)]) continue;
        if (extendable(a, b) || extendable(b, a)) continue;
        Bits p;
        for (int z = 0; z < n; ++z)
          if (d(a, z) + d(z, b) == d(a, b)) p.set(z);
        convex_paths.push_back(p);
      }
  }
};

}  // namespace mvis::detail
