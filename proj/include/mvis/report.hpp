#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "mvis/oracles.hpp"
#include "mvis/solver.hpp"
#include "mvis/visibility.hpp"

namespace mvis {

using json = nlohmann::json;

inline constexpr int kReportFormatVersion = 1;

inline json set_json(const Graph& g, const VertexSet& s) {
  json j;
  j["ids"] = s.ids();
  if (g.has_labels()) {
    json labels = json::array();
    for (Vertex v : s.ids()) labels.push_back(g.label(v));
    j["labels"] = labels;
  }
  j["size"] = s.size();
  return j;
}

inline json pair_json(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return json::array({e->first, e->second});
}

inline json to_json(const Graph& g, const VertexSet& x, const VisibilityReport& r) {
  json j;
  j["set"] = set_json(g, x);
  for (Variant v : kAllVariants) {
    j[std::string(to_string(v))] = r.holds(v);
    if (!r.holds(v)) j["violations"][std::string(to_string(v))] = pair_json(r.violation(v));
  }
  return j;
}

inline json to_json(const SolveStats& s) {
  return {{"nodes_explored", s.nodes_explored}, {"prunes", s.prunes}, {"elapsed_ms", s.elapsed_ms}};
}

inline json to_json(const Graph& g, const SolveResult& r) {
  return {{"variant", to_string(r.variant)},
          {"value", r.value},
          {"witness", set_json(g, r.witness)},
          {"method", to_string(r.method)},
          {"stats", to_json(r.stats)}};
}

inline json to_json(const OracleValue& o) {
  json j{{"kind", to_string(o.kind)}, {"source", o.source}};
  j["value"] = o.value ? json(*o.value) : json(nullptr);
  return j;
}

inline json error_json(const Error& e) {
  json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* inc = dynamic_cast<const Incomplete*>(&e)) {
    j["lower_bound"] = inc->lower_bound();
    j["stats"] = to_json(inc->stats());
  }
  return j;
}

}  // namespace mvis
