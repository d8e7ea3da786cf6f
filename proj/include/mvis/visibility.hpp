#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

enum class Variant { mutual, total, outer, dual };

inline constexpr std::array<Variant, 4> kAllVariants{Variant::mutual, Variant::total, Variant::outer,
                                                     Variant::dual};

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::mutual: return "mutual";
    case Variant::total: return "total";
    case Variant::outer: return "outer";
    case Variant::dual: return "dual";
  }
  return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  for (Variant v : kAllVariants)
    if (to_string(v) == s) return v;
  return std::nullopt;
}

/// Mutual, outer and total sets stay valid under deletion; dual sets do not.
inline constexpr bool is_hereditary(Variant v) { return v != Variant::dual; }

/// Hop distances from source along paths whose internal vertices avoid x.
/// Members of x other than the source are reached but never expanded.
/// kUnreachable marks vertices with no such path.
inline std::vector<Distance> constrained_distances(const Graph& g, const VertexSet& x, Vertex source) {
  if (!g.valid(source)) throw Error(ErrorCode::invalid_vertex_id, "constrained BFS source");
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue(g.order());
  std::size_t head = 0, tail = 0;
  dist[static_cast<std::size_t>(source)] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex u = queue[head++];
    if (u != source && x.contains(u)) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = static_cast<Distance>(dist[static_cast<std::size_t>(u)] + 1);
        queue[tail++] = w;
      }
    }
  }
  return dist;
}

/// True iff some u,v-geodesic has no internal vertex in x.
inline bool is_pair_visible(const Graph& g, const VertexSet& x, Vertex u, Vertex v) {
  if (!g.valid(u) || !g.valid(v)) throw Error(ErrorCode::invalid_vertex_id, "visibility endpoint");
  if (u == v || g.has_edge(u, v)) return true;
  return constrained_distances(g, x, u)[static_cast<std::size_t>(v)] == g.distance(u, v);
}

struct VisibilityReport {
  bool is_mutual = true;
  bool is_total = true;
  bool is_outer = true;
  bool is_dual = true;
  // Lexicographically first pair (u < v) that is not visible, per failed variant.
  std::optional<Edge> mutual_violation;
  std::optional<Edge> total_violation;
  std::optional<Edge> outer_violation;
  std::optional<Edge> dual_violation;

  bool holds(Variant v) const {
    switch (v) {
      case Variant::mutual: return is_mutual;
      case Variant::total: return is_total;
      case Variant::outer: return is_outer;
      case Variant::dual: return is_dual;
    }
    return false;
  }
  const std::optional<Edge>& violation(Variant v) const {
    switch (v) {
      case Variant::mutual: return mutual_violation;
      case Variant::total: return total_violation;
      case Variant::outer: return outer_violation;
      case Variant::dual: return dual_violation;
    }
    return total_violation;
  }
};

namespace detail {

// Row of "visible from source" flags.
inline std::vector<char> visible_row(const Graph& g, const VertexSet& x, Vertex source) {
  const auto cd = constrained_distances(g, x, source);
  const auto d = g.distances().row(source);
  std::vector<char> row(g.order());
  for (std::size_t v = 0; v < row.size(); ++v) row[v] = cd[v] == d[v];
  return row;
}

inline void check_universe(const Graph& g, const VertexSet& x) {
  if (x.capacity() != g.order())
    throw Error(ErrorCode::invalid_vertex_id, "vertex set capacity " + std::to_string(x.capacity()) +
                                                  " does not match graph order " + std::to_string(g.order()));
}

}  // namespace detail

/// Classifies x under all four variants with one constrained BFS per vertex.
inline VisibilityReport classify_set(const Graph& g, const VertexSet& x) {
  detail::check_universe(g, x);
  VisibilityReport r;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    const auto row = detail::visible_row(g, x, u);
    const bool u_in = x.contains(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (row[static_cast<std::size_t>(v)]) continue;
      const bool v_in = x.contains(v);
      const Edge pair{u, v};
      if (r.is_total) {
        r.is_total = false;
        r.total_violation = pair;
      }
      if (u_in && v_in && r.is_mutual) {
        r.is_mutual = false;
        r.mutual_violation = pair;
      }
      if ((u_in || v_in) && r.is_outer) {
        r.is_outer = false;
        r.outer_violation = pair;
      }
      if (u_in == v_in && r.is_dual) {
        r.is_dual = false;
        r.dual_violation = pair;
      }
    }
  }
  return r;
}

/// Single-variant test. Mutual and outer run a BFS from members of x only
/// (O(|x| m)); dual and total need every vertex as a source (O(n m)).
inline bool is_visibility_set(const Graph& g, const VertexSet& x, Variant variant) {
  detail::check_universe(g, x);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    const bool u_in = x.contains(u);
    if (!u_in && (variant == Variant::mutual || variant == Variant::outer)) continue;
    const auto row = detail::visible_row(g, x, u);
    for (Vertex v = 0; v < n; ++v) {
      if (row[static_cast<std::size_t>(v)]) continue;
      const bool v_in = x.contains(v);
      switch (variant) {
        case Variant::mutual:
          if (v_in) return false;
          break;
        case Variant::outer:
          return false;
        case Variant::dual:
          if (u_in == v_in) return false;
          break;
        case Variant::total:
          return false;
      }
    }
  }
  return true;
}

/// True iff v is not the middle vertex of any convex P3, i.e. no two
/// non-adjacent neighbors of v have v as their only common neighbor.
inline bool is_bypass_candidate(const Graph& g, Vertex v) {
  if (!g.valid(v)) throw Error(ErrorCode::invalid_vertex_id, "bypass candidate vertex");
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const Vertex a = nb[i], b = nb[j];
      if (g.has_edge(a, b)) continue;
      const auto na = g.neighbors(a), nbb = g.neighbors(b);
      std::size_t common = 0;
      for (auto p = na.begin(), q = nbb.begin(); p != na.end() && q != nbb.end();) {
        if (*p < *q) {
          ++p;
        } else if (*q < *p) {
          ++q;
        } else {
          ++common;
          ++p;
          ++q;
        }
      }
      if (common == 1) return false;
    }
  }
  return true;
}

}  // namespace mvis
