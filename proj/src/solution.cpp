#include "mfl/solution.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mfl {

namespace {

using nlohmann::json;

// Shared path walk for evaluate/check_feasibility. Returns a violation
// message, or an empty string if the path is fully valid.
std::string path_problem(const Instance& inst, int store, const Path& p) {
  std::ostringstream os;
  if (p.plant < 0 || p.plant >= inst.num_plants || p.warehouse < 0 ||
      p.warehouse >= inst.num_warehouses || p.dc < 0 || p.dc >= inst.num_dcs) {
    os << "eligibility/range: store " << store << " path (" << p.plant << ", " << p.warehouse << ", "
       << p.dc << ") has an out-of-range index";
    return os.str();
  }
  if (!inst.eligible(store, p.plant)) {
    os << "eligibility/range: store " << store << " cannot be served by plant " << p.plant;
    return os.str();
  }
  if (!inst.pw.has(p.plant, p.warehouse)) {
    os << "missing arc: store " << store << " pw (" << p.plant << ", " << p.warehouse << ")";
    return os.str();
  }
  if (!inst.wd.has(p.warehouse, p.dc)) {
    os << "missing arc: store " << store << " wd (" << p.warehouse << ", " << p.dc << ")";
    return os.str();
  }
  if (!inst.ds.has(p.dc, store)) {
    os << "missing arc: store " << store << " ds (" << p.dc << ", " << store << ")";
    return os.str();
  }
  return {};
}

}  // namespace

std::int64_t evaluate(const Instance& inst, const Assignment& assignment) {
  if (assignment.size() != static_cast<std::size_t>(inst.num_stores))
    throw StructuralError("assignment length does not match store count");
  std::vector<std::uint8_t> plant_used(static_cast<std::size_t>(inst.num_plants));
  std::vector<std::uint8_t> warehouse_used(static_cast<std::size_t>(inst.num_warehouses));
  std::vector<std::uint8_t> dc_used(static_cast<std::size_t>(inst.num_dcs));

  std::int64_t total = 0;
  for (int m = 0; m < inst.num_stores; ++m) {
    const auto& slot = assignment[static_cast<std::size_t>(m)];
    if (!slot) continue;
    const Path& p = *slot;
    if (std::string problem = path_problem(inst, m, p); !problem.empty()) throw StructuralError(problem);
    total += inst.revenue[static_cast<std::size_t>(m)] - inst.fixed_store[static_cast<std::size_t>(m)] -
             inst.pw.cost(p.plant, p.warehouse) - inst.wd.cost(p.warehouse, p.dc) - inst.ds.cost(p.dc, m);
    plant_used[static_cast<std::size_t>(p.plant)] = 1;
    warehouse_used[static_cast<std::size_t>(p.warehouse)] = 1;
    dc_used[static_cast<std::size_t>(p.dc)] = 1;
  }
  for (int n = 0; n < inst.num_plants; ++n)
    if (plant_used[static_cast<std::size_t>(n)]) total -= inst.fixed_plant[static_cast<std::size_t>(n)];
  for (int k = 0; k < inst.num_warehouses; ++k)
    if (warehouse_used[static_cast<std::size_t>(k)])
      total -= inst.fixed_warehouse[static_cast<std::size_t>(k)];
  for (int j = 0; j < inst.num_dcs; ++j)
    if (dc_used[static_cast<std::size_t>(j)]) total -= inst.fixed_dc[static_cast<std::size_t>(j)];
  return total;
}

FeasibilityReport check_feasibility(const Instance& inst, const Assignment& assignment) {
  FeasibilityReport rep;
  if (assignment.size() != static_cast<std::size_t>(inst.num_stores)) {
    rep.violations.push_back("assignment length does not match store count");
    return rep;
  }
  std::vector<std::uint8_t> plant_used(static_cast<std::size_t>(inst.num_plants));
  std::vector<std::uint8_t> warehouse_used(static_cast<std::size_t>(inst.num_warehouses));
  std::vector<std::uint8_t> dc_used(static_cast<std::size_t>(inst.num_dcs));
  int open = 0;
  for (int m = 0; m < inst.num_stores; ++m) {
    const auto& slot = assignment[static_cast<std::size_t>(m)];
    if (!slot) continue;
    ++open;
    if (std::string problem = path_problem(inst, m, *slot); !problem.empty()) {
      rep.violations.push_back(problem);
      continue;
    }
    plant_used[static_cast<std::size_t>(slot->plant)] = 1;
    warehouse_used[static_cast<std::size_t>(slot->warehouse)] = 1;
    dc_used[static_cast<std::size_t>(slot->dc)] = 1;
  }

  auto count = [](const std::vector<std::uint8_t>& v) {
    int c = 0;
    for (auto b : v) c += b != 0;
    return c;
  };
  auto check_bound = [&rep](const char* what, int used, int bound) {
    if (used > bound) {
      std::ostringstream os;
      os << what << " bound: " << used << " > " << bound;
      rep.violations.push_back(os.str());
    }
  };
  check_bound("store", open, inst.bound_stores);
  check_bound("plant", count(plant_used), inst.bound_plants);
  check_bound("warehouse", count(warehouse_used), inst.bound_warehouses);
  check_bound("dc", count(dc_used), inst.bound_dcs);
  return rep;
}

UsageCounts recount_usage(const Instance& inst, const Assignment& assignment) {
  UsageCounts counts;
  counts.plant.assign(static_cast<std::size_t>(inst.num_plants), 0);
  counts.warehouse.assign(static_cast<std::size_t>(inst.num_warehouses), 0);
  counts.dc.assign(static_cast<std::size_t>(inst.num_dcs), 0);
  for (const auto& slot : assignment) {
    if (!slot) continue;
    ++counts.plant[static_cast<std::size_t>(slot->plant)];
    ++counts.warehouse[static_cast<std::size_t>(slot->warehouse)];
    ++counts.dc[static_cast<std::size_t>(slot->dc)];
  }
  return counts;
}

Solution empty_solution(const Instance& inst) {
  Solution sol;
  sol.assignment.assign(static_cast<std::size_t>(inst.num_stores), std::nullopt);
  sol.usage_plant.assign(static_cast<std::size_t>(inst.num_plants), 0);
  sol.usage_warehouse.assign(static_cast<std::size_t>(inst.num_warehouses), 0);
  sol.usage_dc.assign(static_cast<std::size_t>(inst.num_dcs), 0);
  return sol;
}

Solution make_solution(const Instance& inst, Assignment assignment) {
  Solution sol;
  sol.objective = evaluate(inst, assignment);  // also validates every path
  sol.assignment = std::move(assignment);
  UsageCounts counts = recount_usage(inst, sol.assignment);
  sol.usage_plant = std::move(counts.plant);
  sol.usage_warehouse = std::move(counts.warehouse);
  sol.usage_dc = std::move(counts.dc);
  for (const auto& slot : sol.assignment) sol.open_stores += slot.has_value();
  for (int c : sol.usage_plant) sol.used_plants += c > 0;
  for (int c : sol.usage_warehouse) sol.used_warehouses += c > 0;
  for (int c : sol.usage_dc) sol.used_dcs += c > 0;
  return sol;
}

void save_solution(const Solution& sol, const std::filesystem::path& file) {
  json assignment = json::array();
  for (const auto& slot : sol.assignment) {
    if (slot)
      assignment.push_back({slot->plant, slot->warehouse, slot->dc});
    else
      assignment.push_back(nullptr);
  }
  json j;
  j["assignment"] = std::move(assignment);
  j["objective"] = sol.objective;
  std::ofstream out(file);
  if (!out) throw IoError("cannot open file for writing: " + file.string());
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + file.string());
}

Solution load_solution(const Instance& inst, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open solution file: " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("solution JSON parse error: ") + e.what());
  }
  if (!j.contains("assignment") || !j.at("assignment").is_array())
    throw ParseError("missing field: assignment");
  if (!j.contains("objective") || !j.at("objective").is_number_integer())
    throw ParseError("missing field: objective");
  const json& arr = j.at("assignment");
  if (arr.size() != static_cast<std::size_t>(inst.num_stores))
    throw ParseError("assignment length does not match store count");

  Assignment assignment;
  assignment.reserve(arr.size());
  for (const json& slot : arr) {
    if (slot.is_null()) {
      assignment.push_back(std::nullopt);
    } else if (slot.is_array() && slot.size() == 3 && slot[0].is_number_integer() &&
               slot[1].is_number_integer() && slot[2].is_number_integer()) {
      assignment.push_back(Path{slot[0].get<int>(), slot[1].get<int>(), slot[2].get<int>()});
    } else {
      throw ParseError("assignment entries must be null or [plant, warehouse, dc]");
    }
  }

  Solution sol;
  try {
    sol = make_solution(inst, std::move(assignment));
  } catch (const StructuralError& e) {
    throw ParseError(std::string("solution does not fit instance: ") + e.what());
  }
  const auto claimed = j.at("objective").get<std::int64_t>();
  if (claimed != sol.objective) {
    std::ostringstream os;
    os << "objective self-check failed: file claims " << claimed << ", evaluation gives " << sol.objective;
    throw ParseError(os.str());
  }
  return sol;
}

}  // namespace mfl
