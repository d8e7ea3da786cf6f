#pragma once

// Reference implementations that share nothing with the library beyond the
// Graph container: Floyd-Warshall distances, explicit geodesic enumeration,
// and 2^n subset enumeration.

#include <functional>
#include <vector>

#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace naive {

using mvis::Graph;
using mvis::Variant;
using mvis::Vertex;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = static_cast<int>(g.order());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Walks every u,v-geodesic explicitly; true if one has no internal vertex in x.
inline bool visible(const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<bool>& x, int u, int v) {
  if (u == v) return true;
  std::function<bool(int)> walk = [&](int cur) {
    if (cur == v) return true;
    for (Vertex w : g.neighbors(cur)) {
      if (d[u][w] != d[u][cur] + 1 || d[w][v] != d[cur][v] - 1) continue;
      if (w != v && x[w]) continue;
      if (walk(w)) return true;
    }
    return false;
  };
  return walk(u);
}

inline bool holds(const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<bool>& x, Variant var) {
  const int n = static_cast<int>(g.order());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool needed = false;
      switch (var) {
        case Variant::mutual: needed = x[u] && x[v]; break;
        case Variant::total: needed = true; break;
        case Variant::outer: needed = x[u] || x[v]; break;
        case Variant::dual: needed = x[u] == x[v]; break;
      }
      if (needed && !visible(g, d, x, u, v)) return false;
    }
  return true;
}

inline std::vector<bool> mask_to_set(std::uint32_t mask, int n) {
  std::vector<bool> x(n);
  for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u;
  return x;
}

/// Maximum size of a set of the given variant, by 2^n enumeration.
inline int brute_force(const Graph& g, Variant var) {
  const int n = static_cast<int>(g.order());
  const auto d = floyd_warshall(g);
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    if (holds(g, d, mask_to_set(mask, n), var)) best = size;
  }
  return best;
}

/// Lexicographically least maximum set (sorted-id order), by enumeration.
inline std::vector<Vertex> brute_force_witness(const Graph& g, Variant var) {
  const int n = static_cast<int>(g.order());
  const int best = brute_force(g, var);
  const auto d = floyd_warshall(g);
  std::vector<Vertex> winner;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != best || !holds(g, d, mask_to_set(mask, n), var)) continue;
    std::vector<Vertex> ids;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) ids.push_back(i);
    if (winner.empty() || ids < winner) winner = ids;
  }
  return winner;
}

inline int independence_number(const Graph& g) {
  const int n = static_cast<int>(g.order());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (((mask >> a) & 1u) && ((mask >> b) & 1u)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace naive
