#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvis/edge_list.hpp"
#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

enum class FamilyKind {
  path,
  cycle,
  complete,
  star,
  random_tree,
  grid,
  torus,
  path_product_k,
  gadget_gn,
  gadget_ht,
  reduction_gprime,
};

/// A graph family instance. Canonical strings:
///   path:N  cycle:N  complete:N  star:K  tree:N:seed=S  grid:NxM  torus:NxM
///   grid:N1xN2x...xNk  gn:N  ht:T  gprime:<edge-list file>:t=T
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> dims;  // N for 1-parameter kinds; factor sizes for products
  std::uint64_t seed = 0;
  int t = 0;                                // gprime clique parameter
  std::string base_path;                    // gprime base file, as written in the spec string
  std::shared_ptr<const Graph> base_graph;  // gprime base graph

  int n() const { return dims.empty() ? 0 : dims[0]; }
  int m() const { return dims.size() > 1 ? dims[1] : 0; }

  static FamilySpec make(FamilyKind kind, std::vector<int> dims, std::uint64_t seed = 0) {
    FamilySpec s;
    s.kind = kind;
    s.dims = std::move(dims);
    s.seed = seed;
    return s;
  }
  static FamilySpec path(int n) { return make(FamilyKind::path, {n}); }
  static FamilySpec cycle(int n) { return make(FamilyKind::cycle, {n}); }
  static FamilySpec complete(int n) { return make(FamilyKind::complete, {n}); }
  static FamilySpec star(int k) { return make(FamilyKind::star, {k}); }
  static FamilySpec random_tree(int n, std::uint64_t seed) { return make(FamilyKind::random_tree, {n}, seed); }
  static FamilySpec grid(int n, int m) { return make(FamilyKind::grid, {n, m}); }
  static FamilySpec torus(int n, int m) { return make(FamilyKind::torus, {n, m}); }
  static FamilySpec path_product(std::vector<int> sizes) { return make(FamilyKind::path_product_k, std::move(sizes)); }
  static FamilySpec gn(int n) { return make(FamilyKind::gadget_gn, {n}); }
  static FamilySpec ht(int t) { return make(FamilyKind::gadget_ht, {t}); }
  static FamilySpec gprime(Graph base, int t, std::string label = "<graph>") {
    FamilySpec s = make(FamilyKind::reduction_gprime, {});
    s.t = t;
    s.base_path = std::move(label);
    s.base_graph = std::make_shared<const Graph>(std::move(base));
    return s;
  }
};

inline std::string to_string(const FamilySpec& s) {
  auto dims = [&] {
    std::string out;
    for (std::size_t i = 0; i < s.dims.size(); ++i) out += (i ? "x" : "") + std::to_string(s.dims[i]);
    return out;
  };
  switch (s.kind) {
    case FamilyKind::path: return "path:" + dims();
    case FamilyKind::cycle: return "cycle:" + dims();
    case FamilyKind::complete: return "complete:" + dims();
    case FamilyKind::star: return "star:" + dims();
    case FamilyKind::random_tree: return "tree:" + dims() + ":seed=" + std::to_string(s.seed);
    case FamilyKind::grid:
    case FamilyKind::path_product_k: return "grid:" + dims();
    case FamilyKind::torus: return "torus:" + dims();
    case FamilyKind::gadget_gn: return "gn:" + dims();
    case FamilyKind::gadget_ht: return "ht:" + dims();
    case FamilyKind::reduction_gprime: return "gprime:" + s.base_path + ":t=" + std::to_string(s.t);
  }
  return "?";
}

namespace detail {

inline int parse_int(std::string_view text, const std::string& spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error(ErrorCode::bad_spec, "bad integer '" + std::string(text) + "' in '" + spec + "'");
  return value;
}

inline std::vector<int> parse_dims(std::string_view text, const std::string& spec) {
  std::vector<int> out;
  std::size_t start = 0;
  for (;;) {
    const auto x = text.find('x', start);
    out.push_back(parse_int(text.substr(start, x == std::string_view::npos ? text.npos : x - start), spec));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  return out;
}

}  // namespace detail

/// True when the text names a known family kind ("grid:4x3", ...).
inline bool looks_like_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return false;
  const auto kind = text.substr(0, colon);
  for (std::string_view k : {"path", "cycle", "complete", "star", "tree", "grid", "torus", "gn", "ht", "gprime"})
    if (kind == k) return true;
  return false;
}

inline FamilySpec parse_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::bad_spec, "expected <kind>:<params>, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  FamilySpec s;
  if (kind == "gprime") {
    const auto tpos = rest.rfind(":t=");
    if (tpos == std::string::npos) throw Error(ErrorCode::bad_spec, "gprime needs ':t=<int>' in '" + text + "'");
    s.kind = FamilyKind::reduction_gprime;
    s.base_path = rest.substr(0, tpos);
    s.t = detail::parse_int(std::string_view(rest).substr(tpos + 3), text);
    s.base_graph = std::make_shared<const Graph>(load_edge_list(s.base_path));
    return s;
  }
  if (kind == "tree") {
    const auto spos = rest.find(":seed=");
    s.kind = FamilyKind::random_tree;
    s.dims = {detail::parse_int(std::string_view(rest).substr(0, spos), text)};
    if (spos != std::string::npos)
      s.seed = static_cast<std::uint64_t>(detail::parse_int(std::string_view(rest).substr(spos + 6), text));
    return s;
  }
  s.dims = detail::parse_dims(rest, text);
  if (kind == "path") s.kind = FamilyKind::path;
  else if (kind == "cycle") s.kind = FamilyKind::cycle;
  else if (kind == "complete") s.kind = FamilyKind::complete;
  else if (kind == "star") s.kind = FamilyKind::star;
  else if (kind == "grid") s.kind = s.dims.size() > 2 ? FamilyKind::path_product_k : FamilyKind::grid;
  else if (kind == "torus") s.kind = FamilyKind::torus;
  else if (kind == "gn") s.kind = FamilyKind::gadget_gn;
  else if (kind == "ht") s.kind = FamilyKind::gadget_ht;
  else throw Error(ErrorCode::bad_spec, "unknown family kind '" + kind + "'");

  const bool two_dims = s.kind == FamilyKind::grid || s.kind == FamilyKind::torus;
  if (two_dims && s.dims.size() != 2) throw Error(ErrorCode::bad_spec, "expected NxM in '" + text + "'");
  if (!two_dims && s.kind != FamilyKind::path_product_k && s.dims.size() != 1)
    throw Error(ErrorCode::bad_spec, "expected a single size in '" + text + "'");
  return s;
}

// ---------------------------------------------------------------------------
// Generators

inline Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::bad_params, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(static_cast<std::size_t>(n), e, {}, "path:" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::bad_params, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(static_cast<std::size_t>(n), e, {}, "cycle:" + std::to_string(n));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::bad_params, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(static_cast<std::size_t>(n), e, {}, "complete:" + std::to_string(n));
}

/// K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(int k) {
  if (k < 1) throw Error(ErrorCode::bad_params, "star needs k >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return build_graph(static_cast<std::size_t>(k) + 1, e, {}, "star:" + std::to_string(k));
}

/// Uniform labeled tree from a seeded Prüfer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::bad_params, "random tree needs n >= 2");
  const std::string name = "tree:" + std::to_string(n) + ":seed=" + std::to_string(seed);
  if (n == 2) return build_graph(2, std::vector<Edge>{{0, 1}}, {}, name);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> e;
  for (int c : code) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    e.emplace_back(leaf, c);
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(c)];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      e.emplace_back(u, v);
      break;
    }
  }
  return build_graph(static_cast<std::size_t>(n), e, {}, name);
}

/// Random tree plus each remaining pair as an edge with probability p.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::bad_params, "random graph needs n >= 1");
  if (n == 1) return build_graph(1, std::vector<Edge>{}, {}, "random");
  std::vector<Edge> e = random_tree(n, seed).edges();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return build_graph(static_cast<std::size_t>(n), e, {},
                     "random:" + std::to_string(n) + ":seed=" + std::to_string(seed));
}

/// Grid/torus vertex for 1-based coordinates (i, j), i in [n], j in [m].
inline Vertex grid_vertex(int m, int i, int j) { return static_cast<Vertex>((i - 1) * m + (j - 1)); }

inline Graph grid_graph(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::bad_params, "grid needs n, m >= 1");
  return cartesian_product(path_graph(n), path_graph(m), "grid:" + std::to_string(n) + "x" + std::to_string(m));
}

inline Graph torus_graph(int n, int m) {
  if (n < 3 || m < 3) throw Error(ErrorCode::bad_params, "torus needs n, m >= 3");
  return cartesian_product(cycle_graph(n), cycle_graph(m), "torus:" + std::to_string(n) + "x" + std::to_string(m));
}

inline Graph path_product(const std::vector<int>& sizes) {
  if (sizes.empty()) throw Error(ErrorCode::bad_params, "path product needs at least one factor");
  Graph g = path_graph(sizes[0]);
  std::string name = "grid:" + std::to_string(sizes[0]);
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    name += "x" + std::to_string(sizes[i]);
    g = cartesian_product(g, path_graph(sizes[i]), name);
  }
  return g;
}

/// Vertex ids of the G_n gadget (n five-cycles sharing the edge uv).
struct GnLayout {
  static constexpr Vertex u = 0;
  static constexpr Vertex v = 1;
  static Vertex x(int i) { return 2 + 3 * (i - 1); }
  static Vertex z(int i) { return 3 + 3 * (i - 1); }
  static Vertex y(int i) { return 4 + 3 * (i - 1); }
};

/// G_n: vertices u, v and, per i in [n], the path u - x_i - z_i - y_i - v;
/// plus the edge uv. Order 3n + 2.
inline Graph gadget_gn(int n) {
  if (n < 2) throw Error(ErrorCode::bad_params, "G_n needs n >= 2");
  std::vector<Edge> e{{GnLayout::u, GnLayout::v}};
  std::vector<std::string> labels{"u", "v"};
  for (int i = 1; i <= n; ++i) {
    e.emplace_back(GnLayout::u, GnLayout::x(i));
    e.emplace_back(GnLayout::x(i), GnLayout::z(i));
    e.emplace_back(GnLayout::z(i), GnLayout::y(i));
    e.emplace_back(GnLayout::y(i), GnLayout::v);
    for (const char* p : {"x", "z", "y"}) labels.push_back(p + std::to_string(i));
  }
  return build_graph(static_cast<std::size_t>(3 * n + 2), e, std::move(labels), "gn:" + std::to_string(n));
}

/// Copy c (1-based) of P4□P3 inside H_t occupies ids 12(c-1) .. 12c-1; the
/// apex x is vertex 12t.
inline Vertex ht_vertex(int copy, int i, int j) { return static_cast<Vertex>(12 * (copy - 1)) + grid_vertex(3, i, j); }

/// H_t: t disjoint copies of P4□P3 and an apex adjacent to each copy's (2,3).
inline Graph gadget_ht(int t) {
  if (t < 2) throw Error(ErrorCode::bad_params, "H_t needs t >= 2");
  const Graph block = grid_graph(4, 3);
  std::vector<Edge> e;
  std::vector<std::string> labels;
  const Vertex apex = 12 * t;
  for (int c = 1; c <= t; ++c) {
    const Vertex offset = 12 * (c - 1);
    for (auto [a, b] : block.edges()) e.emplace_back(offset + a, offset + b);
    for (Vertex v = 0; v < 12; ++v) labels.push_back(std::to_string(c) + ":" + block.label(v));
    e.emplace_back(apex, ht_vertex(c, 2, 3));
  }
  labels.emplace_back("x");
  return build_graph(static_cast<std::size_t>(12 * t + 1), e, std::move(labels), "ht:" + std::to_string(t));
}

// ---------------------------------------------------------------------------
// Reduction from independent set

enum class VertexRole { original, edge_vertex, apex_x, apex_clique, pendant_clique };

inline std::string_view to_string(VertexRole r) {
  switch (r) {
    case VertexRole::original: return "original";
    case VertexRole::edge_vertex: return "edge_vertex";
    case VertexRole::apex_x: return "apex_x";
    case VertexRole::apex_clique: return "apex_clique";
    case VertexRole::pendant_clique: return "pendant_clique";
  }
  return "?";
}

struct VertexTag {
  VertexRole role = VertexRole::original;
  int index = 0;  // base vertex, base edge index, or clique position (1-based) by role
  int edge = -1;  // base edge index for pendant_clique
};

/// G' built from a base graph G and t >= 3. Layout: base vertices 0..n-1,
/// one edge-vertex per base edge (clique K_m), the apex x, the apex clique
/// x_1..x_t, then a pendant K_t per edge-vertex.
struct ReductionGraph {
  Graph gprime;
  std::vector<VertexTag> tags;
  std::size_t base_order = 0;
  std::vector<Edge> base_edges;
  int t = 0;

  Vertex edge_vertex(std::size_t e) const { return static_cast<Vertex>(base_order + e); }
  Vertex apex() const { return static_cast<Vertex>(base_order + base_edges.size()); }
  Vertex apex_clique(int i) const { return apex() + i; }
  Vertex pendant(std::size_t e, int i) const {
    return apex() + t + 1 + static_cast<Vertex>(e) * t + (i - 1);
  }
};

inline ReductionGraph reduction_gprime(const Graph& g, int t) {
  if (t < 3) throw Error(ErrorCode::bad_params, "reduction needs t >= 3");
  if (g.order() < 2) throw Error(ErrorCode::bad_params, "reduction needs a base graph with at least two vertices");
  ReductionGraph r;
  r.base_order = g.order();
  r.base_edges = g.edges();
  r.t = t;
  const std::size_t n = g.order(), m = r.base_edges.size();
  const std::size_t order = n + m + static_cast<std::size_t>(t + 1) + m * static_cast<std::size_t>(t);
  r.tags.resize(order);
  std::vector<std::string> labels(order);
  std::vector<Edge> e = r.base_edges;

  for (std::size_t v = 0; v < n; ++v) {
    r.tags[v] = {VertexRole::original, static_cast<int>(v)};
    labels[v] = g.label(static_cast<Vertex>(v));
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Vertex ve = r.edge_vertex(k);
    const auto [a, b] = r.base_edges[k];
    r.tags[static_cast<std::size_t>(ve)] = {VertexRole::edge_vertex, static_cast<int>(k)};
    labels[static_cast<std::size_t>(ve)] = "v{" + g.label(a) + "," + g.label(b) + "}";
    e.emplace_back(ve, a);
    e.emplace_back(ve, b);
    for (std::size_t k2 = k + 1; k2 < m; ++k2) e.emplace_back(ve, r.edge_vertex(k2));
  }
  const Vertex x = r.apex();
  r.tags[static_cast<std::size_t>(x)] = {VertexRole::apex_x, 0};
  labels[static_cast<std::size_t>(x)] = "x";
  for (std::size_t v = 0; v < n; ++v) e.emplace_back(x, static_cast<Vertex>(v));
  for (int i = 1; i <= t; ++i) {
    const Vertex xi = r.apex_clique(i);
    r.tags[static_cast<std::size_t>(xi)] = {VertexRole::apex_clique, i};
    labels[static_cast<std::size_t>(xi)] = "x" + std::to_string(i);
    e.emplace_back(x, xi);
    for (int j = i + 1; j <= t; ++j) e.emplace_back(xi, r.apex_clique(j));
  }
  for (std::size_t k = 0; k < m; ++k) {
    const auto [a, b] = r.base_edges[k];
    for (int i = 1; i <= t; ++i) {
      const Vertex p = r.pendant(k, i);
      r.tags[static_cast<std::size_t>(p)] = {VertexRole::pendant_clique, i, static_cast<int>(k)};
      labels[static_cast<std::size_t>(p)] = "e{" + g.label(a) + "," + g.label(b) + "}y" + std::to_string(i);
      e.emplace_back(p, r.edge_vertex(k));
      for (int j = i + 1; j <= t; ++j) e.emplace_back(p, r.pendant(k, j));
    }
  }
  const std::string name = g.name().empty() ? std::string("gprime") : "gprime(" + g.name() + ")";
  r.gprime = build_graph(order, e, std::move(labels), name + ":t=" + std::to_string(t));
  return r;
}

/// S = I ∪ {x_1..x_t} ∪ all pendant-clique vertices; |S| = (m+1)t + |I|.
inline VertexSet reduction_witness(const ReductionGraph& r, const VertexSet& independent) {
  if (independent.capacity() != r.base_order)
    throw Error(ErrorCode::invalid_vertex_id, "independent set must be over the base graph");
  for (auto [a, b] : r.base_edges)
    if (independent.contains(a) && independent.contains(b))
      throw Error(ErrorCode::not_independent,
                  "base edge (" + std::to_string(a) + "," + std::to_string(b) + ") inside the set");
  VertexSet s(r.gprime.order());
  for (Vertex v : independent.ids()) s.insert(v);
  for (int i = 1; i <= r.t; ++i) s.insert(r.apex_clique(i));
  for (std::size_t k = 0; k < r.base_edges.size(); ++k)
    for (int i = 1; i <= r.t; ++i) s.insert(r.pendant(k, i));
  return s;
}

inline Graph generate(const FamilySpec& s) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::bad_params, to_string(s) + ": " + what);
  };
  switch (s.kind) {
    case FamilyKind::path:
      need(s.dims.size() == 1 && s.n() >= 2, "path needs n >= 2");
      return path_graph(s.n());
    case FamilyKind::cycle:
      need(s.dims.size() == 1 && s.n() >= 3, "cycle needs n >= 3");
      return cycle_graph(s.n());
    case FamilyKind::complete:
      need(s.dims.size() == 1 && s.n() >= 1, "complete needs n >= 1");
      return complete_graph(s.n());
    case FamilyKind::star:
      need(s.dims.size() == 1 && s.n() >= 1, "star needs k >= 1");
      return star_graph(s.n());
    case FamilyKind::random_tree:
      need(s.dims.size() == 1 && s.n() >= 2, "tree needs n >= 2");
      return random_tree(s.n(), s.seed);
    case FamilyKind::grid:
      need(s.dims.size() == 2 && s.n() >= 2 && s.m() >= 2, "grid needs n, m >= 2");
      return grid_graph(s.n(), s.m());
    case FamilyKind::torus:
      need(s.dims.size() == 2 && s.n() >= 3 && s.m() >= 3, "torus needs n, m >= 3");
      return torus_graph(s.n(), s.m());
    case FamilyKind::path_product_k:
      need(s.dims.size() >= 2, "path product needs k >= 2 factors");
      for (int d : s.dims) need(d >= 2, "path product factors need n_i >= 2");
      return path_product(s.dims);
    case FamilyKind::gadget_gn:
      need(s.dims.size() == 1 && s.n() >= 2, "G_n needs n >= 2");
      return gadget_gn(s.n());
    case FamilyKind::gadget_ht:
      need(s.dims.size() == 1 && s.n() >= 2, "H_t needs t >= 2");
      return gadget_ht(s.n());
    case FamilyKind::reduction_gprime:
      need(s.base_graph != nullptr, "gprime needs a base graph");
      return reduction_gprime(*s.base_graph, s.t).gprime;
  }
  throw Error(ErrorCode::bad_params, "unknown family");
}

// ---------------------------------------------------------------------------
// Witness constructions

namespace detail {
using Coord = std::pair<int, int>;

inline VertexSet grid_set(int n, int m, const std::vector<Coord>& coords) {
  VertexSet s(static_cast<std::size_t>(n * m));
  for (auto [i, j] : coords) {
    if (i < 1 || i > n || j < 1 || j > m)
      throw Error(ErrorCode::out_of_range, "coordinate (" + std::to_string(i) + "," + std::to_string(j) + ")");
    s.insert(grid_vertex(m, i, j));
  }
  return s;
}
}  // namespace detail

/// Outer mutual-visibility set of P_n□P_m (n >= m) of size m+2, following the
/// corner/diagonal construction with its two local repairs, plus the explicit
/// sets for the small rows m = 2, 3, 5 and the 6×6 grid.
inline VertexSet grid_outer_witness(int n, int m) {
  using detail::Coord;
  if (n < m) throw Error(ErrorCode::out_of_range, "grid_outer_witness expects n >= m");
  if (m == 2 && n >= 3) return detail::grid_set(n, m, {{1, 1}, {n, 1}, {1, 2}, {n, 2}});
  if (m == 3 && n >= 5) return detail::grid_set(n, m, {{1, 1}, {n, 1}, {3, 2}, {1, 3}, {n, 3}});
  if (m == 5 && n >= 7) return detail::grid_set(n, m, {{1, 1}, {n, 1}, {5, 2}, {2, 3}, {4, 4}, {1, 5}, {n, 5}});
  if (n == 6 && m == 6)
    return detail::grid_set(n, m, {{1, 1}, {1, 6}, {3, 2}, {5, 3}, {2, 4}, {4, 5}, {6, 1}, {6, 6}});
  if (n < 7 || m < 4 || m == 5)
    throw Error(ErrorCode::out_of_range,
                "no outer witness construction for P" + std::to_string(n) + "□P" + std::to_string(m));

  // W: corners. A: (2k+1, k+1). B: (2k, half+k+1). When the grid is too long
  // for the diagonal to fit (half > m-2), A is capped at m-2 and B is empty.
  const int half = (n - 2) / 2;
  const int a_len = std::min(half, m - 2);
  const int b_len = std::max(0, m - half - 2);
  std::vector<Coord> x{{1, 1}, {n, 1}, {1, m}, {n, m}};
  for (int k = 1; k <= a_len; ++k) x.emplace_back(2 * k + 1, k + 1);
  for (int k = 1; k <= b_len; ++k) x.emplace_back(2 * k, half + k + 1);

  auto has = [&](Coord c) { return std::find(x.begin(), x.end(), c) != x.end(); };
  auto replace = [&](Coord from, Coord to) { *std::find(x.begin(), x.end(), from) = to; };
  const Coord near_corner{n - 1, m - 1};
  const Coord a_last{2 * a_len + 1, a_len + 1};
  const Coord b_last{2 * b_len, half + b_len + 1};
  if ((a_len > 0 && a_last == near_corner) || (b_len > 0 && b_last == near_corner)) {
    if (has({n - 3, m - 2})) {
      replace({n - 3, m - 2}, {n - 3, m - 1});
      replace(near_corner, {n - 1, m - 2});
    }
  }
  if (b_len == 1 && has({2, m - 1})) replace({2, m - 1}, {4, m - 1});
  return detail::grid_set(n, m, x);
}

/// Dual mutual-visibility set of P_n□P_m: {(1,1),(2,1),(n,m-1),(n,m),(1,m)}
/// for n >= 4, m >= 3; the four corners when m = 2.
inline VertexSet grid_dual_witness(int n, int m) {
  if (m == 2 && n >= 3) return detail::grid_set(n, m, {{1, 1}, {1, 2}, {n, 1}, {n, 2}});
  if (n >= 4 && m >= 3) return detail::grid_set(n, m, {{1, 1}, {2, 1}, {n, m - 1}, {n, m}, {1, m}});
  throw Error(ErrorCode::out_of_range,
              "no dual witness construction for P" + std::to_string(n) + "□P" + std::to_string(m));
}

/// The 2^k corners of P_n1□...□P_nk, a total mutual-visibility set.
inline VertexSet path_product_corners(const std::vector<int>& sizes) {
  if (sizes.empty()) throw Error(ErrorCode::bad_params, "path product needs at least one factor");
  std::size_t order = 1;
  for (int d : sizes) {
    if (d < 2) throw Error(ErrorCode::out_of_range, "path product factors need n_i >= 2");
    order *= static_cast<std::size_t>(d);
  }
  VertexSet s(order);
  for (std::size_t mask = 0; mask < (std::size_t{1} << sizes.size()); ++mask) {
    Vertex id = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) id = id * sizes[i] + ((mask >> i) & 1 ? sizes[i] - 1 : 0);
    s.insert(id);
  }
  return s;
}

/// Witnesses for the nonzero torus cases of the dual and total variants.
inline VertexSet torus_witnesses(int n, int m, Variant variant) {
  using C = std::vector<detail::Coord>;
  const C d_base{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}};
  if (variant == Variant::dual) {
    if ((n == 3 && m == 3) || (n == 4 && m == 3)) return detail::grid_set(n, m, d_base);
    if (n == 4 && m == 4) {
      C d_plus = d_base;
      d_plus.insert(d_plus.end(), {{3, 3}, {3, 4}, {4, 3}});
      return detail::grid_set(n, m, d_plus);
    }
    if (n == 5 && m == 3) return detail::grid_set(n, m, {{1, 1}, {2, 1}});
    if ((n == 5 || n == 6) && m == 4) return detail::grid_set(n, m, {{1, 1}, {2, 1}, {4, 3}, {5, 3}});
    if (n == 6 && m == 3) return detail::grid_set(n, m, {{1, 2}, {2, 2}, {4, 1}, {5, 1}});
  } else if (variant == Variant::total) {
    if ((n == 3 && m == 3) || (n == 4 && m == 3)) return detail::grid_set(n, m, {{1, 1}, {1, 2}, {1, 3}});
    if (n == 4 && m == 4) return detail::grid_set(n, m, {{1, 1}, {1, 2}, {3, 3}, {3, 4}});
  }
  throw Error(ErrorCode::no_witness_known, "no " + std::string(to_string(variant)) + " witness for C" +
                                               std::to_string(n) + "□C" + std::to_string(m));
}

/// Witnesses for G_n: mutual {x_i} ∪ {y_i}, outer {z_i}, dual {x_1, z_1..z_n}.
inline VertexSet gn_witnesses(int n, Variant variant) {
  if (n < 2) throw Error(ErrorCode::bad_params, "G_n needs n >= 2");
  VertexSet s(static_cast<std::size_t>(3 * n + 2));
  switch (variant) {
    case Variant::mutual:
      for (int i = 1; i <= n; ++i) {
        s.insert(GnLayout::x(i));
        s.insert(GnLayout::y(i));
      }
      return s;
    case Variant::outer:
      for (int i = 1; i <= n; ++i) s.insert(GnLayout::z(i));
      return s;
    case Variant::dual:
      s.insert(GnLayout::x(1));
      for (int i = 1; i <= n; ++i) s.insert(GnLayout::z(i));
      return s;
    case Variant::total:
      break;
  }
  throw Error(ErrorCode::no_witness_known, "G_n has no nonempty total mutual-visibility set");
}

/// Witnesses for H_t: per copy of P4□P3, the grid dual set (5 each) or the
/// four corners (outer, 4 each).
inline VertexSet ht_witnesses(int t, Variant variant) {
  if (t < 2) throw Error(ErrorCode::bad_params, "H_t needs t >= 2");
  std::vector<detail::Coord> local;
  if (variant == Variant::dual) local = {{1, 1}, {2, 1}, {4, 2}, {4, 3}, {1, 3}};
  else if (variant == Variant::outer) local = {{1, 1}, {4, 1}, {1, 3}, {4, 3}};
  else throw Error(ErrorCode::no_witness_known, "H_t witnesses exist for dual and outer only");
  VertexSet s(static_cast<std::size_t>(12 * t + 1));
  for (int c = 1; c <= t; ++c)
    for (auto [i, j] : local) s.insert(ht_vertex(c, i, j));
  return s;
}

}  // namespace mvis
