#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "mvis/families.hpp"
#include "mvis/oracles.hpp"
#include "mvis/report.hpp"
#include "mvis/solver.hpp"

namespace mvis {

/// Which instances `run_verification` covers.
struct VerifyScope {
  bool cycles = true;
  int max_cycle = 10;
  bool paths = true;
  int max_path = 10;
  bool grids = true;
  int max_grid = 6;
  bool tori = true;
  int max_torus = 5;
  bool gadgets = true;
  bool products = true;
};

struct InstanceRecord {
  FamilySpec spec;
  Variant variant = Variant::mutual;
  OracleValue oracle;
  std::optional<SolveResult> solved;
  std::optional<int> lower_bound;      // set when the search ran out of budget
  std::optional<VertexSet> construction;  // witness built from a closed-form construction
  bool construction_valid = true;
  bool agree = true;
  std::string note;

  bool incomplete() const { return !solved.has_value(); }
};

struct RunReport {
  std::string command;
  std::vector<InstanceRecord> records;

  std::size_t agreements() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.agree && !r.incomplete(); }));
  }
  std::size_t disagreements() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.agree; }));
  }
  std::size_t incomplete() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.incomplete(); }));
  }
};

/// A construction from the families module for this instance, if one exists.
inline std::optional<VertexSet> constructed_witness(const FamilySpec& spec, Variant v) {
  try {
    switch (spec.kind) {
      case FamilyKind::grid:
        if (spec.n() < spec.m()) return std::nullopt;
        if (v == Variant::outer) return grid_outer_witness(spec.n(), spec.m());
        if (v == Variant::dual) return grid_dual_witness(spec.n(), spec.m());
        if (v == Variant::total && spec.m() >= 3) return path_product_corners(spec.dims);
        return std::nullopt;
      case FamilyKind::path_product_k:
        if (v == Variant::total) return path_product_corners(spec.dims);
        return std::nullopt;
      case FamilyKind::torus: return torus_witnesses(spec.n(), spec.m(), v);
      case FamilyKind::gadget_gn: return gn_witnesses(spec.n(), v);
      case FamilyKind::gadget_ht: return ht_witnesses(spec.n(), v);
      default: return std::nullopt;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::out_of_range || e.code() == ErrorCode::no_witness_known) return std::nullopt;
    throw;
  }
}

inline InstanceRecord verify_instance(const FamilySpec& spec, Variant v, const SolveOptions& opts) {
  InstanceRecord rec;
  rec.spec = spec;
  rec.variant = v;
  rec.oracle = oracle(spec, v);
  const Graph g = generate(spec);

  rec.construction = constructed_witness(spec, v);
  if (rec.construction) {
    rec.construction_valid = classify_set(g, *rec.construction).holds(v);
    if (!rec.construction_valid) rec.note = "constructed witness " + rec.construction->to_string() + " fails";
  }

  try {
    rec.solved = solve(g, v, opts);
    rec.agree = rec.oracle.admits(rec.solved->value) && rec.construction_valid;
    if (rec.construction && rec.construction_valid &&
        static_cast<int>(rec.construction->size()) > rec.solved->value) {
      rec.agree = false;
      rec.note = "construction larger than the computed optimum";
    }
  } catch (const Incomplete& e) {
    rec.lower_bound = e.lower_bound();
    // Incomplete entries are flagged, not failed, unless the bound already contradicts the oracle.
    const bool contradicts = (rec.oracle.kind == OracleKind::exact || rec.oracle.kind == OracleKind::upper_bound) &&
                             e.lower_bound() > *rec.oracle.value;
    rec.agree = !contradicts && rec.construction_valid;
  }
  return rec;
}

inline std::vector<std::pair<FamilySpec, Variant>> verification_instances(const VerifyScope& scope) {
  std::vector<std::pair<FamilySpec, Variant>> out;
  auto all = [&](const FamilySpec& s) {
    for (Variant v : kAllVariants) out.emplace_back(s, v);
  };
  if (scope.cycles)
    for (int n = 3; n <= scope.max_cycle; ++n) all(FamilySpec::cycle(n));
  if (scope.paths)
    for (int n = 2; n <= scope.max_path; ++n) all(FamilySpec::path(n));
  if (scope.grids)
    for (int n = 2; n <= scope.max_grid; ++n)
      for (int m = 2; m <= n; ++m) {
        const auto s = FamilySpec::grid(n, m);
        for (Variant v : kAllVariants)
          if (oracle(s, v).kind != OracleKind::unknown) out.emplace_back(s, v);
      }
  if (scope.tori)
    for (int n = 3; n <= scope.max_torus; ++n)
      for (int m = 3; m <= n; ++m) {
        out.emplace_back(FamilySpec::torus(n, m), Variant::dual);
        out.emplace_back(FamilySpec::torus(n, m), Variant::total);
        out.emplace_back(FamilySpec::torus(n, m), Variant::outer);
      }
  if (scope.gadgets) {
    for (int n = 2; n <= 4; ++n) all(FamilySpec::gn(n));
    out.emplace_back(FamilySpec::ht(2), Variant::dual);
    out.emplace_back(FamilySpec::ht(2), Variant::outer);
  }
  if (scope.products) out.emplace_back(FamilySpec::path_product({3, 3, 3}), Variant::total);
  return out;
}

/// Runs oracle, solver and construction on every instance in scope. Instances
/// are distributed over `workers` threads; records come back sorted by key.
inline RunReport run_verification(const VerifyScope& scope, const SolveOptions& opts, unsigned workers = 1) {
  const auto instances = verification_instances(scope);
  RunReport report;
  report.records.resize(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
      report.records[i] = verify_instance(instances[i].first, instances[i].second, opts);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
    work();
  }
  auto key = [](const InstanceRecord& r) {
    return std::make_tuple(static_cast<int>(r.spec.kind), r.spec.dims, static_cast<int>(r.variant));
  };
  std::stable_sort(report.records.begin(), report.records.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return report;
}

inline json to_json(const InstanceRecord& r) {
  const Graph g = generate(r.spec);
  json j{{"family", to_string(r.spec)}, {"variant", to_string(r.variant)}, {"oracle", to_json(r.oracle)},
         {"agree", r.agree}};
  if (r.solved) {
    j["solved"] = r.solved->value;
    j["witness"] = set_json(g, r.solved->witness);
    j["method"] = to_string(r.solved->method);
    j["stats"] = to_json(r.solved->stats);
  } else {
    j["solved"] = nullptr;
    j["incomplete"] = true;
    j["lower_bound"] = r.lower_bound ? json(*r.lower_bound) : json(nullptr);
  }
  if (r.construction) {
    j["construction"] = set_json(g, *r.construction);
    j["construction_valid"] = r.construction_valid;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const RunReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return {{"format_version", kReportFormatVersion},
          {"command", report.command},
          {"records", records},
          {"summary",
           {{"instances", report.records.size()},
            {"agree", report.agreements()},
            {"disagree", report.disagreements()},
            {"incomplete", report.incomplete()}}}};
}

}  // namespace mvis
