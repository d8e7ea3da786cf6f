#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvis/error.hpp"
#include "mvis/vertex_set.hpp"

namespace mvis {

using Distance = std::uint16_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

using Edge = std::pair<Vertex, Vertex>;

/// Dense symmetric table of hop counts.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

class Graph;
Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {},
                  std::string name = {});

/// Immutable simple connected undirected graph in compressed adjacency form.
/// Copies share the lazily computed distance matrix.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return nbrs_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[static_cast<std::size_t>(v)],
            offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]};
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  bool valid(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const {
    return has_labels() ? labels_[static_cast<std::size_t>(v)] : std::to_string(v);
  }
  /// Vertex carrying the given label, if any. Whitespace is ignored.
  std::optional<Vertex> find_label(std::string_view text) const {
    const auto key = strip_spaces(text);
    for (std::size_t v = 0; v < labels_.size(); ++v)
      if (strip_spaces(labels_[v]) == key) return static_cast<Vertex>(v);
    return std::nullopt;
  }

  const std::string& name() const { return name_; }

  /// All-pairs hop distances, one BFS per source, computed once and cached.
  const DistanceMatrix& distances() const {
    std::call_once(cache_->once, [this] { cache_->dist = compute_distances(); });
    return cache_->dist;
  }
  Distance distance(Vertex u, Vertex v) const { return distances()(u, v); }

  VertexSet empty_set() const { return VertexSet(order()); }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges,
                           std::vector<std::string> labels, std::string name);

 private:
  struct Cache {
    std::once_flag once;
    DistanceMatrix dist;
  };

  static std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != ' ' && c != '\t') out += c;
    return out;
  }

  DistanceMatrix compute_distances() const {
    const std::size_t n = order();
    DistanceMatrix dm(n);
    std::vector<Vertex> queue(n);
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      dm.at(s, s) = 0;
      while (head < tail) {
        const Vertex u = queue[head++];
        const Distance du = dm(s, u);
        for (Vertex w : neighbors(u)) {
          if (dm(s, w) == kUnreachable) {
            dm.at(s, w) = static_cast<Distance>(du + 1);
            queue[tail++] = w;
          }
        }
      }
    }
    return dm;
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbrs_;
  std::vector<std::string> labels_;
  std::string name_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Canonical graph from an edge list: duplicates collapsed, neighbor lists
/// sorted. Throws on loops, out-of-range ids, or a disconnected result.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels,
                         std::string name) {
  if (n == 0) throw Error(ErrorCode::bad_params, "graph must have at least one vertex");
  if (n >= kUnreachable) throw Error(ErrorCode::bad_params, "graph too large");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::bad_params, "label count does not match vertex count");

  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw Error(ErrorCode::invalid_vertex_id,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::invalid_vertex_id, "loop at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.nbrs_.insert(g.nbrs_.end(), nb.begin(), nb.end());
    g.offsets_.push_back(g.nbrs_.size());
  }
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);

  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n)
    throw Error(ErrorCode::disconnected_graph,
                std::to_string(n - reached) + " of " + std::to_string(n) + " vertices unreachable from 0");
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline const DistanceMatrix& all_pairs_distances(const Graph& g) { return g.distances(); }

/// Union of all u,v-geodesics: { z : d(u,z) + d(z,v) = d(u,v) }.
inline VertexSet interval(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(u) || !g.valid(v)) throw Error(ErrorCode::invalid_vertex_id, "interval endpoint");
  const auto& d = g.distances();
  VertexSet out(g.order());
  const int duv = d(u, v);
  for (Vertex z = 0; z < static_cast<Vertex>(g.order()); ++z)
    if (d(u, z) + d(z, v) == duv) out.insert(z);
  return out;
}

/// True iff every geodesic between two members of s stays inside s.
inline bool is_convex(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::empty_set, "convexity of the empty set");
  const auto& d = g.distances();
  const auto members = s.ids();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex u = members[i], v = members[j];
      const int duv = d(u, v);
      for (Vertex z = 0; z < static_cast<Vertex>(g.order()); ++z)
        if (!s.contains(z) && d(u, z) + d(z, v) == duv) return false;
    }
  }
  return true;
}

struct GraphStats {
  std::size_t min_degree = 0;
  std::size_t diameter = 0;
  std::optional<std::size_t> girth;  // empty for forests
  std::size_t leaf_count = 0;
};

inline GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  const std::size_t n = g.order();
  const auto& d = g.distances();
  st.min_degree = n > 1 ? g.degree(0) : 0;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    if (g.degree(v) == 1) ++st.leaf_count;
    for (Vertex w = 0; w < static_cast<Vertex>(n); ++w)
      st.diameter = std::max<std::size_t>(st.diameter, d(v, w));
  }

  // Shortest cycle through BFS trees: a non-tree edge (u,w) seen from root s
  // closes a walk of length d(s,u)+d(s,w)+1 containing a cycle at most that long,
  // and the minimum over all roots is attained exactly.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue[tail++] = w;
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min<std::size_t>(best, static_cast<std::size_t>(dist[static_cast<std::size_t>(u)] + dw + 1));
        }
      }
    }
  }
  if (best != std::numeric_limits<std::size_t>::max()) st.girth = best;
  return st;
}

namespace detail {
inline std::string coord_text(const Graph& g, Vertex v) {
  if (!g.has_labels()) return std::to_string(v + 1);
  std::string s = g.label(v);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}
}  // namespace detail

/// g□h with vertex (a,b) at index a*n(h)+b. Labels are 1-based coordinate
/// tuples "(i,j)"; factors that already carry tuple labels are flattened.
inline Graph cartesian_product(const Graph& g, const Graph& h, std::string name = {}) {
  const std::size_t ng = g.order(), nh = h.order();
  auto id = [nh](Vertex a, Vertex b) { return static_cast<Vertex>(static_cast<std::size_t>(a) * nh + static_cast<std::size_t>(b)); };
  std::vector<Edge> edges;
  edges.reserve(ng * h.size() + nh * g.size());
  for (Vertex a = 0; a < static_cast<Vertex>(ng); ++a)
    for (auto [b, c] : h.edges()) edges.emplace_back(id(a, b), id(a, c));
  for (auto [a, c] : g.edges())
    for (Vertex b = 0; b < static_cast<Vertex>(nh); ++b) edges.emplace_back(id(a, b), id(c, b));
  std::vector<std::string> labels(ng * nh);
  for (Vertex a = 0; a < static_cast<Vertex>(ng); ++a)
    for (Vertex b = 0; b < static_cast<Vertex>(nh); ++b)
      labels[static_cast<std::size_t>(id(a, b))] = "(" + detail::coord_text(g, a) + "," + detail::coord_text(h, b) + ")";
  return build_graph(ng * nh, edges, std::move(labels), std::move(name));
}

/// Subgraph induced by s, vertices renumbered in ascending order of s.
/// The second member maps new ids back to ids of g.
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto members = s.ids();
  if (members.empty()) throw Error(ErrorCode::empty_set, "induced subgraph of the empty set");
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex u : members) {
    if (g.has_labels()) labels.push_back(g.label(u));
    for (Vertex w : g.neighbors(u))
      if (u < w && local[static_cast<std::size_t>(w)] >= 0)
        edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]);
  }
  return {build_graph(members.size(), edges, std::move(labels)), members};
}

}  // namespace mvis
