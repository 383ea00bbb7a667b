#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mfl/instance.hpp"

namespace mfl {

// Full service path for one open store.
struct Path {
  int plant = -1;
  int warehouse = -1;
  int dc = -1;

  friend bool operator==(const Path&, const Path&) = default;
};

using Assignment = std::vector<std::optional<Path>>;  // one entry per store; nullopt = closed

// A solution plus the incrementally-maintained caches the move deltas rely
// on: per-facility usage counts (how many open stores route through each
// node), distinct used-facility counts for the cardinality bounds, and the
// cached objective value.
struct Solution {
  Assignment assignment;
  std::vector<int> usage_plant;
  std::vector<int> usage_warehouse;
  std::vector<int> usage_dc;
  int open_stores = 0;
  int used_plants = 0;
  int used_warehouses = 0;
  int used_dcs = 0;
  std::int64_t objective = 0;

  bool is_open(int store) const { return assignment[static_cast<std::size_t>(store)].has_value(); }
  const Path& path(int store) const { return *assignment[static_cast<std::size_t>(store)]; }

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.assignment == b.assignment && a.objective == b.objective;
  }
};

// Total profit: sum over open stores of revenue minus store fixed cost minus
// the three transport legs, minus fixed costs of every facility used by at
// least one open store (facilities are open exactly when used).
// Throws StructuralError if a path references a missing arc, an ineligible
// plant, or an out-of-range index.
std::int64_t evaluate(const Instance& inst, const Assignment& assignment);

struct FeasibilityReport {
  std::vector<std::string> violations;
  bool feasible() const { return violations.empty(); }
};

// Lists every violated constraint: structural path problems and all four
// cardinality bounds. Structurally broken paths are reported, not thrown.
FeasibilityReport check_feasibility(const Instance& inst, const Assignment& assignment);

struct UsageCounts {
  std::vector<int> plant;
  std::vector<int> warehouse;
  std::vector<int> dc;
};

// Usage counts recomputed from scratch (reference implementation the cached
// counts are audited against).
UsageCounts recount_usage(const Instance& inst, const Assignment& assignment);

Solution empty_solution(const Instance& inst);

// Builds the full cached Solution from a raw assignment (validates paths via
// evaluate; throws StructuralError on broken ones).
Solution make_solution(const Instance& inst, Assignment assignment);

// Solution file: {"assignment": [null | [plant, warehouse, dc], ...],
// "objective": <int>}. Loading re-evaluates and fails on mismatch so stale
// files are caught early.
void save_solution(const Solution& sol, const std::filesystem::path& file);
Solution load_solution(const Instance& inst, const std::filesystem::path& file);

}  // namespace mfl
