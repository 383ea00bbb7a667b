#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mfl/errors.hpp"

namespace mfl {

struct Arc {
  int from = 0;
  int to = 0;
  std::int64_t cost = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Dense from x to cost lookup; negative cell means the arc is absent.
class CostGrid {
 public:
  CostGrid() = default;
  CostGrid(int rows, int cols)
      : rows_(rows), cols_(cols),
        cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), -1) {}

  bool has(int a, int b) const { return cells_[idx(a, b)] >= 0; }
  std::int64_t cost(int a, int b) const { return cells_[idx(a, b)]; }
  // Returns false if the cell was already set (duplicate arc).
  bool set(int a, int b, std::int64_t c) {
    auto& cell = cells_[idx(a, b)];
    if (cell >= 0) return false;
    cell = c;
    return true;
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(b);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> cells_;
};

// One problem instance: which stores can be served from which plants, the
// three transport arc layers plant->warehouse->dc->store, per-node fixed
// costs, per-store revenue, and cardinality bounds on how many nodes of each
// layer may be used. All money values are integral.
struct Instance {
  std::string name;
  int num_stores = 0;      // m
  int num_plants = 0;      // n
  int num_warehouses = 0;  // k
  int num_dcs = 0;         // j

  std::vector<std::int64_t> revenue;      // per store
  std::vector<std::int64_t> fixed_store;  // per store
  std::vector<std::int64_t> fixed_plant;
  std::vector<std::int64_t> fixed_warehouse;
  std::vector<std::int64_t> fixed_dc;

  int bound_stores = 0;      // us
  int bound_plants = 0;      // up
  int bound_warehouses = 0;  // uw
  int bound_dcs = 0;         // ud

  std::vector<std::vector<int>> eligibility;  // per store: ascending plant ids allowed to serve it
  std::vector<Arc> pw_arcs;                   // plant -> warehouse
  std::vector<Arc> wd_arcs;                   // warehouse -> dc
  std::vector<Arc> ds_arcs;                   // dc -> store

  // Derived lookup structures; valid only after reindex().
  CostGrid pw;
  CostGrid wd;
  CostGrid ds;
  std::vector<std::uint8_t> elig_mask;  // num_stores x num_plants

  bool indexed() const { return pw.rows() == num_plants && ds.cols() == num_stores; }
  bool eligible(int store, int plant) const {
    return elig_mask[static_cast<std::size_t>(store) * static_cast<std::size_t>(num_plants) +
                     static_cast<std::size_t>(plant)] != 0;
  }
  // Rebuilds the dense grids and eligibility mask from the arc/eligibility
  // lists. Throws StructuralError on out-of-range indices or duplicates.
  void reindex();

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.name == b.name && a.num_stores == b.num_stores && a.num_plants == b.num_plants &&
           a.num_warehouses == b.num_warehouses && a.num_dcs == b.num_dcs && a.revenue == b.revenue &&
           a.fixed_store == b.fixed_store && a.fixed_plant == b.fixed_plant &&
           a.fixed_warehouse == b.fixed_warehouse && a.fixed_dc == b.fixed_dc &&
           a.bound_stores == b.bound_stores && a.bound_plants == b.bound_plants &&
           a.bound_warehouses == b.bound_warehouses && a.bound_dcs == b.bound_dcs &&
           a.eligibility == b.eligibility && a.pw_arcs == b.pw_arcs && a.wd_arcs == b.wd_arcs &&
           a.ds_arcs == b.ds_arcs;
  }
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct GenParams {
  int m = 0;
  int n = 0;
  int k = 0;
  int j = 0;
  double density = 0.20;         // independent presence probability per eligibility entry / arc
  double bound_fraction = 0.20;  // each bound = ceil(fraction * set size)
  IntRange revenue_range{50, 150};
  IntRange transport_cost_range{1, 20};
  IntRange fixed_store_range{5, 50};
  IntRange fixed_plant_range{20, 100};
  IntRange fixed_warehouse_range{20, 100};
  IntRange fixed_dc_range{20, 100};
  std::uint64_t seed = 0;
};

// Deterministic pseudo-random instance for the given parameters; the name
// encodes sizes and seed as "MFL-m-n-k-j-seed". Throws ParamError on invalid
// parameters (non-positive sizes, density outside (0,1], lo > hi, ...).
Instance generate(const GenParams& params);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks structural invariants (array lengths, index ranges, non-negative
// money, bounds within set sizes, duplicate arcs). Works on un-indexed
// instances so that broken ones can be diagnosed.
ValidationReport validate(const Instance& inst);

// Stores reachable through at least one complete eligible path
// plant -> warehouse -> dc -> store. Ascending order. Requires an indexed instance.
std::vector<int> reachable_stores(const Instance& inst);

Instance load_instance(const std::filesystem::path& file);
void save_instance(const Instance& inst, const std::filesystem::path& file);

}  // namespace mfl
