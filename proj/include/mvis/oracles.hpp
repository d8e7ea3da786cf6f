#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "mvis/families.hpp"
#include "mvis/solver.hpp"

namespace mvis {

enum class OracleKind { exact, upper_bound, lower_bound, unknown };

inline std::string_view to_string(OracleKind k) {
  switch (k) {
    case OracleKind::exact: return "exact";
    case OracleKind::upper_bound: return "upper_bound";
    case OracleKind::lower_bound: return "lower_bound";
    case OracleKind::unknown: return "unknown";
  }
  return "?";
}

struct OracleValue {
  OracleKind kind = OracleKind::unknown;
  std::optional<int> value;
  std::string source;

  static OracleValue exact(int v, std::string src) { return {OracleKind::exact, v, std::move(src)}; }
  static OracleValue upper(int v, std::string src) { return {OracleKind::upper_bound, v, std::move(src)}; }
  static OracleValue lower(int v, std::string src) { return {OracleKind::lower_bound, v, std::move(src)}; }
  static OracleValue none(std::string src) { return {OracleKind::unknown, std::nullopt, std::move(src)}; }

  /// Whether a computed value is consistent with this entry.
  bool admits(int solved) const {
    switch (kind) {
      case OracleKind::exact: return solved == *value;
      case OracleKind::upper_bound: return solved <= *value;
      case OracleKind::lower_bound: return solved >= *value;
      case OracleKind::unknown: return true;
    }
    return false;
  }
};

namespace detail {

inline OracleValue cycle_oracle(int n, Variant v) {
  switch (v) {
    case Variant::mutual: return OracleValue::exact(3, "cycles: mu(C_n) = 3 for n >= 3");
    case Variant::total:
      return OracleValue::exact(n == 3 ? 3 : n == 4 ? 2 : 0, "cycles: mu_t(C_n) = 3, 2, 0 for n = 3, n = 4, n >= 5");
    case Variant::dual:
      return OracleValue::exact(n <= 4 ? 3 : n <= 6 ? 2 : 0,
                                "cycles: mu_d(C_n) = 3, 2, 0 for n in {3,4}, n in {5,6}, n >= 7");
    case Variant::outer: return OracleValue::exact(n == 3 ? 3 : 2, "cycles: mu_o(C_n) = 3 for n = 3, 2 for n >= 4");
  }
  return OracleValue::none("");
}

inline OracleValue grid_oracle(int n, int m, Variant v) {
  if (n < m) std::swap(n, m);
  switch (v) {
    case Variant::mutual:
      if (m >= 4) return OracleValue::exact(2 * m, "grids: mu(P_n x P_m) = 2 min{n,m} for n, m >= 4");
      return OracleValue::none("grids: mu not settled for min{n,m} < 4");
    case Variant::total:
      if (m >= 3) return OracleValue::exact(4, "path products: mu_t(P_n1 x ... x P_nk) = 2^k for k >= 2, n_i >= 3");
      return OracleValue::none("grids: mu_t not covered for min{n,m} = 2");
    case Variant::outer: {
      const std::string src = "grids: mu_o(P_n x P_m), n >= m >= 2, exceptional table, m+2 otherwise";
      if (n == 2 && m == 2) return OracleValue::exact(2, src);
      if ((n == 3 && m == 2) || (n == 3 && m == 3) || (n == 4 && m == 3) || (n == 4 && m == 4))
        return OracleValue::exact(4, src);
      if ((n == 5 && m == 4) || (n == 5 && m == 5) || (n == 6 && m == 4)) return OracleValue::exact(5, src);
      if (n == 6 && m == 5) return OracleValue::exact(6, src);
      return OracleValue::exact(m + 2, src);
    }
    case Variant::dual: {
      const std::string src = "grids: mu_d(P_n x P_m) = 3 at (2,2); 4 at (3,3) and m = 2; 5 otherwise";
      if (n == 2 && m == 2) return OracleValue::exact(3, src);
      if ((n == 3 && m == 3) || m == 2) return OracleValue::exact(4, src);
      return OracleValue::exact(5, src);
    }
  }
  return OracleValue::none("");
}

inline OracleValue torus_oracle(int n, int m, Variant v) {
  if (n < m) std::swap(n, m);
  switch (v) {
    case Variant::dual: {
      const std::string src = "tori: mu_d(C_n x C_m), n >= m >= 3, case table, 0 otherwise";
      if ((n == 3 || n == 4) && m == 3) return OracleValue::exact(5, src);
      if (n == 4 && m == 4) return OracleValue::exact(8, src);
      if (n == 5 && m == 3) return OracleValue::exact(2, src);
      if ((n == 5 && m == 4) || (n == 6 && m == 3) || (n == 6 && m == 4)) return OracleValue::exact(4, src);
      return OracleValue::exact(0, src);
    }
    case Variant::total: {
      const std::string src = "tori: mu_t(C_n x C_m) = 3 at (3,3),(4,3); 4 at (4,4); 0 otherwise";
      if ((n == 3 || n == 4) && m == 3) return OracleValue::exact(3, src);
      if (n == 4 && m == 4) return OracleValue::exact(4, src);
      return OracleValue::exact(0, src);
    }
    case Variant::outer: return OracleValue::upper(2 * m, "tori: mu_o(C_n x C_m) <= 2m for n >= m >= 3");
    case Variant::mutual: return OracleValue::none("tori: mu not settled");
  }
  return OracleValue::none("");
}

}  // namespace detail

/// Closed-form value or bound for a family instance.
inline OracleValue oracle(const FamilySpec& spec, Variant v) {
  const int n = spec.n();
  switch (spec.kind) {
    case FamilyKind::cycle: return detail::cycle_oracle(n, v);
    case FamilyKind::path: return OracleValue::exact(2, "paths: tau(P_n) = 2 for every variant");
    case FamilyKind::star:
    case FamilyKind::random_tree: {
      const int leaves = static_cast<int>(graph_stats(generate(spec)).leaf_count);
      return OracleValue::exact(leaves, "trees: every variant equals the number of leaves L(T)");
    }
    case FamilyKind::complete: return OracleValue::exact(n, "complete graphs: every variant equals n");
    case FamilyKind::grid: return detail::grid_oracle(n, spec.m(), v);
    case FamilyKind::torus: return detail::torus_oracle(n, spec.m(), v);
    case FamilyKind::path_product_k: {
      const bool all_ge3 = std::all_of(spec.dims.begin(), spec.dims.end(), [](int d) { return d >= 3; });
      if (v == Variant::total && all_ge3)
        return OracleValue::exact(1 << spec.dims.size(),
                                  "path products: mu_t(P_n1 x ... x P_nk) = 2^k for k >= 2, n_i >= 3");
      return OracleValue::none("path products: only mu_t is settled");
    }
    case FamilyKind::gadget_gn: {
      const std::string src = "G_n: mu = 2n, mu_d = n+1, mu_o = n, mu_t = 0 for n >= 2";
      switch (v) {
        case Variant::mutual: return OracleValue::exact(2 * n, src);
        case Variant::dual: return OracleValue::exact(n + 1, src);
        case Variant::outer: return OracleValue::exact(n, src);
        case Variant::total: return OracleValue::exact(0, src);
      }
      break;
    }
    case FamilyKind::gadget_ht: {
      const std::string src = "H_t: mu_d = 5t and mu_o = 4t for t >= 2";
      if (v == Variant::dual) return OracleValue::exact(5 * n, src);
      if (v == Variant::outer) return OracleValue::exact(4 * n, src);
      return OracleValue::none("H_t: mu and mu_t not settled");
    }
    case FamilyKind::reduction_gprime: {
      if (!spec.base_graph) throw Error(ErrorCode::bad_params, "gprime oracle needs the base graph");
      const int alpha = solve_independence(*spec.base_graph).value;
      const int m = static_cast<int>(spec.base_graph->size());
      return OracleValue::exact((m + 1) * spec.t + alpha,
                                "reduction: every variant of G' equals (m+1)t + alpha(G)");
    }
  }
  throw Error(ErrorCode::unsupported_family, "no oracle for " + to_string(spec));
}

struct ComparisonTable {
  SolveResult mutual, total, outer, dual;
  bool ordering_holds = false;  // total <= outer <= mutual and total <= dual <= mutual
  double mutual_to_outer = 0.0;
  bool exceeds_twice_outer = false;  // exploratory: mu > 2 mu_o

  const SolveResult& get(Variant v) const {
    switch (v) {
      case Variant::mutual: return mutual;
      case Variant::total: return total;
      case Variant::outer: return outer;
      case Variant::dual: return dual;
    }
    return mutual;
  }
};

inline bool ordering_holds(int mu, int mu_t, int mu_o, int mu_d) {
  return mu_t <= mu_o && mu_o <= mu && mu_t <= mu_d && mu_d <= mu;
}

inline ComparisonTable comparison_table(const Graph& g, const SolveOptions& opts = {}) {
  ComparisonTable t;
  t.mutual = solve(g, Variant::mutual, opts);
  t.total = solve(g, Variant::total, opts);
  t.outer = solve(g, Variant::outer, opts);
  t.dual = solve(g, Variant::dual, opts);
  t.ordering_holds = ordering_holds(t.mutual.value, t.total.value, t.outer.value, t.dual.value);
  t.mutual_to_outer = t.outer.value ? static_cast<double>(t.mutual.value) / t.outer.value : 0.0;
  t.exceeds_twice_outer = t.mutual.value > 2 * t.outer.value;
  return t;
}

}  // namespace mvis
