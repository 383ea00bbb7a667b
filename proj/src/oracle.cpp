#include "mfl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <vector>

namespace mfl {

namespace {

struct PathOption {
  std::int64_t cost = 0;
  int plant = 0;
  int warehouse = 0;
  int dc = 0;
};

// Feasible paths of one store, cheapest first; ties keep canonical
// (plant, warehouse, dc) order so the scan below is deterministic.
std::vector<PathOption> sorted_paths(const Instance& inst, int store) {
  std::vector<PathOption> paths;
  for (int n : inst.eligibility[static_cast<std::size_t>(store)])
    for (int k = 0; k < inst.num_warehouses; ++k) {
      if (!inst.pw.has(n, k)) continue;
      for (int j = 0; j < inst.num_dcs; ++j) {
        if (!inst.wd.has(k, j) || !inst.ds.has(j, store)) continue;
        paths.push_back(PathOption{inst.pw.cost(n, k) + inst.wd.cost(k, j) + inst.ds.cost(j, store),
                                   n, k, j});
      }
    }
  std::stable_sort(paths.begin(), paths.end(),
                   [](const PathOption& a, const PathOption& b) { return a.cost < b.cost; });
  return paths;
}

}  // namespace

ExactResult exact_enumerate(const Instance& inst) {
  if (!inst.indexed()) throw StructuralError("instance is not indexed");
  if (inst.num_plants > 6 || inst.num_warehouses > 6 || inst.num_dcs > 6 || inst.num_stores > 12) {
    std::ostringstream os;
    os << "exact enumeration refused: sizes (" << inst.num_plants << " plants, " << inst.num_warehouses
       << " warehouses, " << inst.num_dcs << " dcs, " << inst.num_stores
       << " stores) exceed the guard (6, 6, 6, 12)";
    throw GuardError(os.str());
  }

  std::vector<std::vector<PathOption>> store_paths;
  store_paths.reserve(static_cast<std::size_t>(inst.num_stores));
  for (int m = 0; m < inst.num_stores; ++m) store_paths.push_back(sorted_paths(inst, m));

  struct StorePick {
    std::int64_t profit;
    int store;
    const PathOption* path;
  };

  std::int64_t best_value = 0;  // opening nothing is always feasible and worth 0
  std::vector<StorePick> best_picks;

  std::vector<StorePick> picks;
  const unsigned plant_masks = 1u << inst.num_plants;
  const unsigned warehouse_masks = 1u << inst.num_warehouses;
  const unsigned dc_masks = 1u << inst.num_dcs;
  for (unsigned pm = 0; pm < plant_masks; ++pm) {
    if (std::popcount(pm) > inst.bound_plants) continue;
    for (unsigned wm = 0; wm < warehouse_masks; ++wm) {
      if (std::popcount(wm) > inst.bound_warehouses) continue;
      for (unsigned dm = 0; dm < dc_masks; ++dm) {
        if (std::popcount(dm) > inst.bound_dcs) continue;

        picks.clear();
        for (int m = 0; m < inst.num_stores; ++m) {
          for (const PathOption& p : store_paths[static_cast<std::size_t>(m)]) {
            if (!(pm >> p.plant & 1u) || !(wm >> p.warehouse & 1u) || !(dm >> p.dc & 1u)) continue;
            const std::int64_t profit = inst.revenue[static_cast<std::size_t>(m)] -
                                        inst.fixed_store[static_cast<std::size_t>(m)] - p.cost;
            if (profit > 0) picks.push_back(StorePick{profit, m, &p});
            break;  // cheapest admissible path found
          }
        }
        std::sort(picks.begin(), picks.end(), [](const StorePick& a, const StorePick& b) {
          return a.profit != b.profit ? a.profit > b.profit : a.store < b.store;
        });
        if (static_cast<int>(picks.size()) > inst.bound_stores)
          picks.resize(static_cast<std::size_t>(inst.bound_stores));

        std::int64_t value = 0;
        unsigned used_p = 0, used_w = 0, used_d = 0;
        for (const StorePick& pick : picks) {
          value += pick.profit;
          used_p |= 1u << pick.path->plant;
          used_w |= 1u << pick.path->warehouse;
          used_d |= 1u << pick.path->dc;
        }
        for (int n = 0; n < inst.num_plants; ++n)
          if (used_p >> n & 1u) value -= inst.fixed_plant[static_cast<std::size_t>(n)];
        for (int k = 0; k < inst.num_warehouses; ++k)
          if (used_w >> k & 1u) value -= inst.fixed_warehouse[static_cast<std::size_t>(k)];
        for (int j = 0; j < inst.num_dcs; ++j)
          if (used_d >> j & 1u) value -= inst.fixed_dc[static_cast<std::size_t>(j)];

        if (value > best_value) {
          best_value = value;
          best_picks = picks;
        }
      }
    }
  }

  Assignment assignment(static_cast<std::size_t>(inst.num_stores), std::nullopt);
  for (const StorePick& pick : best_picks)
    assignment[static_cast<std::size_t>(pick.store)] =
        Path{pick.path->plant, pick.path->warehouse, pick.path->dc};

  ExactResult result;
  result.solution = make_solution(inst, std::move(assignment));
  result.objective = result.solution.objective;
  return result;
}

std::size_t count_feasible_paths(const Instance& inst) {
  std::size_t count = 0;
  for (int m = 0; m < inst.num_stores; ++m)
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k) {
        if (!inst.pw.has(n, k)) continue;
        for (int j = 0; j < inst.num_dcs; ++j)
          if (inst.wd.has(k, j) && inst.ds.has(j, m)) ++count;
      }
  return count;
}

namespace {

// Accumulates "+ c name" / "- c name" terms, wrapping long lines.
class TermWriter {
 public:
  TermWriter(std::ostream& out, int terms_per_line) : out_(out), wrap_(terms_per_line) {}
  void add(std::int64_t coeff, const std::string& name) {
    if (count_ == 0)
      out_ << " obj: ";
    else if (count_ % wrap_ == 0)
      out_ << "\n      ";
    else
      out_ << " ";
    if (count_ == 0 && coeff >= 0)
      out_ << coeff;
    else if (coeff >= 0)
      out_ << "+ " << coeff;
    else
      out_ << "- " << -coeff;
    out_ << " " << name;
    ++count_;
  }
  bool empty() const { return count_ == 0; }

 private:
  std::ostream& out_;
  int wrap_;
  int count_ = 0;
};

}  // namespace

void export_path_ip(const Instance& inst, std::ostream& out) {
  if (!inst.indexed()) throw StructuralError("instance is not indexed");
  const std::size_t paths = count_feasible_paths(inst);
  if (paths > 1000000) {
    std::ostringstream os;
    os << "path export refused: " << paths << " feasible paths exceed the 1000000 guard";
    throw GuardError(os.str());
  }

  auto path_var = [](int n, int k, int j, int m) {
    std::ostringstream os;
    os << "x_" << n << "_" << k << "_" << j << "_" << m;
    return os.str();
  };

  out << "\\ " << inst.name << "\n";
  out << "Maximize\n";
  TermWriter obj(out, 8);
  for (int m = 0; m < inst.num_stores; ++m)
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k) {
        if (!inst.pw.has(n, k)) continue;
        for (int j = 0; j < inst.num_dcs; ++j) {
          if (!inst.wd.has(k, j) || !inst.ds.has(j, m)) continue;
          const std::int64_t coeff = inst.revenue[static_cast<std::size_t>(m)] - inst.pw.cost(n, k) -
                                     inst.wd.cost(k, j) - inst.ds.cost(j, m);
          obj.add(coeff, path_var(n, k, j, m));
        }
      }
  for (int m = 0; m < inst.num_stores; ++m)
    obj.add(-inst.fixed_store[static_cast<std::size_t>(m)], "s" + std::to_string(m));
  for (int n = 0; n < inst.num_plants; ++n)
    obj.add(-inst.fixed_plant[static_cast<std::size_t>(n)], "p" + std::to_string(n));
  for (int k = 0; k < inst.num_warehouses; ++k)
    obj.add(-inst.fixed_warehouse[static_cast<std::size_t>(k)], "w" + std::to_string(k));
  for (int j = 0; j < inst.num_dcs; ++j)
    obj.add(-inst.fixed_dc[static_cast<std::size_t>(j)], "d" + std::to_string(j));
  if (obj.empty()) out << " obj: 0 s0";
  out << "\n";

  out << "Subject To\n";
  std::size_t link_idx = 0;
  for (int m = 0; m < inst.num_stores; ++m) {
    std::vector<std::string> store_path_vars;
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k) {
        if (!inst.pw.has(n, k)) continue;
        for (int j = 0; j < inst.num_dcs; ++j) {
          if (!inst.wd.has(k, j) || !inst.ds.has(j, m)) continue;
          const std::string x = path_var(n, k, j, m);
          out << " link_p_" << link_idx << ": " << x << " - p" << n << " <= 0\n";
          out << " link_w_" << link_idx << ": " << x << " - w" << k << " <= 0\n";
          out << " link_d_" << link_idx << ": " << x << " - d" << j << " <= 0\n";
          out << " link_s_" << link_idx << ": " << x << " - s" << m << " <= 0\n";
          ++link_idx;
          store_path_vars.push_back(x);
        }
      }
    if (!store_path_vars.empty()) {
      out << " one_path_" << m << ":";
      for (std::size_t i = 0; i < store_path_vars.size(); ++i)
        out << (i == 0 ? " " : " + ") << store_path_vars[i];
      out << " <= 1\n";
    }
  }
  auto cardinality_row = [&out](const char* row, char prefix, int count, int bound) {
    out << " " << row << ":";
    for (int i = 0; i < count; ++i) out << (i == 0 ? " " : " + ") << prefix << i;
    out << " <= " << bound << "\n";
  };
  cardinality_row("card_s", 's', inst.num_stores, inst.bound_stores);
  cardinality_row("card_p", 'p', inst.num_plants, inst.bound_plants);
  cardinality_row("card_w", 'w', inst.num_warehouses, inst.bound_warehouses);
  cardinality_row("card_d", 'd', inst.num_dcs, inst.bound_dcs);

  out << "Binary\n";
  for (int m = 0; m < inst.num_stores; ++m)
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k) {
        if (!inst.pw.has(n, k)) continue;
        for (int j = 0; j < inst.num_dcs; ++j)
          if (inst.wd.has(k, j) && inst.ds.has(j, m)) out << " " << path_var(n, k, j, m) << "\n";
      }
  for (int m = 0; m < inst.num_stores; ++m) out << " s" << m << "\n";
  for (int n = 0; n < inst.num_plants; ++n) out << " p" << n << "\n";
  for (int k = 0; k < inst.num_warehouses; ++k) out << " w" << k << "\n";
  for (int j = 0; j < inst.num_dcs; ++j) out << " d" << j << "\n";
  out << "End\n";
}

void export_path_ip(const Instance& inst, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot open file for writing: " + file.string());
  export_path_ip(inst, out);
  if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace mfl
