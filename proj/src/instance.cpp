#include "mfl/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mfl/rng.hpp"

namespace mfl {

namespace {

using nlohmann::json;

std::string arc_layer_name(int layer) {
  switch (layer) {
    case 0: return "pw";
    case 1: return "wd";
    default: return "ds";
  }
}

void index_arcs(CostGrid& grid, const std::vector<Arc>& arcs, int rows, int cols, int layer) {
  grid = CostGrid(rows, cols);
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= rows || a.to < 0 || a.to >= cols) {
      std::ostringstream os;
      os << arc_layer_name(layer) << " arc endpoint out of range: (" << a.from << ", " << a.to << ")";
      throw StructuralError(os.str());
    }
    if (!grid.set(a.from, a.to, a.cost)) {
      std::ostringstream os;
      os << "duplicate " << arc_layer_name(layer) << " arc (" << a.from << ", " << a.to << ")";
      throw StructuralError(os.str());
    }
  }
}

void require_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);
}

std::int64_t get_int(const json& j, const char* key) {
  require_field(j, key);
  if (!j.at(key).is_number_integer()) throw ParseError(std::string("field is not an integer: ") + key);
  return j.at(key).get<std::int64_t>();
}

std::vector<std::int64_t> get_int_array(const json& j, const char* key, std::size_t expected,
                                        const char* what) {
  require_field(j, key);
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field is not an array: ") + key);
  if (arr.size() != expected) {
    std::ostringstream os;
    os << what << " length " << arr.size() << " does not match size " << expected;
    throw ParseError(os.str());
  }
  std::vector<std::int64_t> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw ParseError(std::string("non-integer entry in ") + key);
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::vector<Arc> get_arcs(const json& j, const char* key) {
  require_field(j, key);
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field is not an array: ") + key);
  std::vector<Arc> out;
  out.reserve(arr.size());
  std::set<std::pair<int, int>> seen;
  for (const json& t : arr) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer()) {
      throw ParseError(std::string("arc entries in ") + key + " must be [from, to, cost] integer triples");
    }
    Arc a{t[0].get<int>(), t[1].get<int>(), t[2].get<std::int64_t>()};
    if (!seen.emplace(a.from, a.to).second) {
      std::ostringstream os;
      os << "duplicate arc in " << key << ": (" << a.from << ", " << a.to << ")";
      throw ParseError(os.str());
    }
    out.push_back(a);
  }
  return out;
}

void check_range(const char* what, const IntRange& r) {
  if (r.lo > r.hi) throw ParamError(std::string(what) + ": lo exceeds hi");
  if (r.lo < 0) throw ParamError(std::string(what) + ": negative values not allowed");
}

json arcs_to_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.from, a.to, a.cost});
  return out;
}

}  // namespace

void Instance::reindex() {
  index_arcs(pw, pw_arcs, num_plants, num_warehouses, 0);
  index_arcs(wd, wd_arcs, num_warehouses, num_dcs, 1);
  index_arcs(ds, ds_arcs, num_dcs, num_stores, 2);
  if (static_cast<int>(eligibility.size()) != num_stores)
    throw StructuralError("eligibility list length does not match store count");
  elig_mask.assign(static_cast<std::size_t>(num_stores) * static_cast<std::size_t>(num_plants), 0);
  for (int m = 0; m < num_stores; ++m) {
    for (int n : eligibility[static_cast<std::size_t>(m)]) {
      if (n < 0 || n >= num_plants) {
        std::ostringstream os;
        os << "eligibility entry out of range for store " << m << ": " << n;
        throw StructuralError(os.str());
      }
      elig_mask[static_cast<std::size_t>(m) * static_cast<std::size_t>(num_plants) +
                static_cast<std::size_t>(n)] = 1;
    }
  }
}

Instance generate(const GenParams& p) {
  if (p.m <= 0 || p.n <= 0 || p.k <= 0 || p.j <= 0)
    throw ParamError("sizes m, n, k, j must all be positive");
  if (!(p.density > 0.0) || p.density > 1.0) throw ParamError("density must be in (0, 1]");
  if (!(p.bound_fraction > 0.0) || p.bound_fraction > 1.0)
    throw ParamError("bound_fraction must be in (0, 1]");
  check_range("revenue_range", p.revenue_range);
  check_range("transport_cost_range", p.transport_cost_range);
  check_range("fixed_store_range", p.fixed_store_range);
  check_range("fixed_plant_range", p.fixed_plant_range);
  check_range("fixed_warehouse_range", p.fixed_warehouse_range);
  check_range("fixed_dc_range", p.fixed_dc_range);

  Instance inst;
  inst.num_stores = p.m;
  inst.num_plants = p.n;
  inst.num_warehouses = p.k;
  inst.num_dcs = p.j;
  {
    std::ostringstream os;
    os << "MFL-" << p.m << "-" << p.n << "-" << p.k << "-" << p.j << "-" << p.seed;
    inst.name = os.str();
  }
  inst.bound_stores = static_cast<int>(std::ceil(p.bound_fraction * p.m));
  inst.bound_plants = static_cast<int>(std::ceil(p.bound_fraction * p.n));
  inst.bound_warehouses = static_cast<int>(std::ceil(p.bound_fraction * p.k));
  inst.bound_dcs = static_cast<int>(std::ceil(p.bound_fraction * p.j));

  Rng rng(p.seed);

  // Draw order is part of the reproducibility contract: eligibility rows,
  // then pw / wd / ds arcs row-major (cost drawn right after a presence hit),
  // then revenue and the four fixed-cost arrays.
  inst.eligibility.resize(static_cast<std::size_t>(p.m));
  for (int m = 0; m < p.m; ++m)
    for (int n = 0; n < p.n; ++n)
      if (rand_bernoulli(rng, p.density)) inst.eligibility[static_cast<std::size_t>(m)].push_back(n);

  auto draw_arcs = [&](int rows, int cols, std::vector<Arc>& out) {
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < cols; ++b)
        if (rand_bernoulli(rng, p.density))
          out.push_back(Arc{a, b, rand_int(rng, p.transport_cost_range.lo, p.transport_cost_range.hi)});
  };
  draw_arcs(p.n, p.k, inst.pw_arcs);
  draw_arcs(p.k, p.j, inst.wd_arcs);
  draw_arcs(p.j, p.m, inst.ds_arcs);

  auto draw_money = [&](int count, const IntRange& r, std::vector<std::int64_t>& out) {
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(rand_int(rng, r.lo, r.hi));
  };
  draw_money(p.m, p.revenue_range, inst.revenue);
  draw_money(p.m, p.fixed_store_range, inst.fixed_store);
  draw_money(p.n, p.fixed_plant_range, inst.fixed_plant);
  draw_money(p.k, p.fixed_warehouse_range, inst.fixed_warehouse);
  draw_money(p.j, p.fixed_dc_range, inst.fixed_dc);

  inst.reindex();
  return inst;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (inst.num_stores <= 0 || inst.num_plants <= 0 || inst.num_warehouses <= 0 || inst.num_dcs <= 0)
    flag("set sizes must be positive");

  auto check_len = [&](const char* what, std::size_t got, int want) {
    if (got != static_cast<std::size_t>(want)) {
      std::ostringstream os;
      os << what << " length " << got << " does not match size " << want;
      flag(os.str());
    }
  };
  check_len("revenue", inst.revenue.size(), inst.num_stores);
  check_len("fixed_store", inst.fixed_store.size(), inst.num_stores);
  check_len("fixed_plant", inst.fixed_plant.size(), inst.num_plants);
  check_len("fixed_warehouse", inst.fixed_warehouse.size(), inst.num_warehouses);
  check_len("fixed_dc", inst.fixed_dc.size(), inst.num_dcs);
  check_len("eligibility", inst.eligibility.size(), inst.num_stores);

  auto check_money = [&](const char* what, const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0) {
        std::ostringstream os;
        os << "negative " << what << " at index " << i;
        flag(os.str());
      }
  };
  check_money("revenue", inst.revenue);
  check_money("fixed_store cost", inst.fixed_store);
  check_money("fixed_plant cost", inst.fixed_plant);
  check_money("fixed_warehouse cost", inst.fixed_warehouse);
  check_money("fixed_dc cost", inst.fixed_dc);

  auto check_bound = [&](const char* what, int bound, int size) {
    if (bound < 0) flag(std::string(what) + " bound is negative");
    if (bound > size) {
      std::ostringstream os;
      os << what << " bound exceeds set size: " << bound << " > " << size;
      flag(os.str());
    }
  };
  check_bound("store", inst.bound_stores, inst.num_stores);
  check_bound("plant", inst.bound_plants, inst.num_plants);
  check_bound("warehouse", inst.bound_warehouses, inst.num_warehouses);
  check_bound("dc", inst.bound_dcs, inst.num_dcs);

  for (std::size_t m = 0; m < inst.eligibility.size(); ++m) {
    std::set<int> seen;
    for (int n : inst.eligibility[m]) {
      if (n < 0 || n >= inst.num_plants) {
        std::ostringstream os;
        os << "eligibility entry out of range for store " << m << ": " << n;
        flag(os.str());
      } else if (!seen.insert(n).second) {
        std::ostringstream os;
        os << "duplicate eligibility entry for store " << m << ": " << n;
        flag(os.str());
      }
    }
  }

  auto check_arcs = [&](const char* what, const std::vector<Arc>& arcs, int rows, int cols) {
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs) {
      if (a.from < 0 || a.from >= rows || a.to < 0 || a.to >= cols) {
        std::ostringstream os;
        os << what << " arc endpoint out of range: (" << a.from << ", " << a.to << ")";
        flag(os.str());
      } else if (!seen.emplace(a.from, a.to).second) {
        std::ostringstream os;
        os << "duplicate " << what << " arc (" << a.from << ", " << a.to << ")";
        flag(os.str());
      }
      if (a.cost < 0) {
        std::ostringstream os;
        os << "negative " << what << " arc cost at (" << a.from << ", " << a.to << ")";
        flag(os.str());
      }
    }
  };
  check_arcs("pw", inst.pw_arcs, inst.num_plants, inst.num_warehouses);
  check_arcs("wd", inst.wd_arcs, inst.num_warehouses, inst.num_dcs);
  check_arcs("ds", inst.ds_arcs, inst.num_dcs, inst.num_stores);

  return rep;
}

std::vector<int> reachable_stores(const Instance& inst) {
  // warehouse_fed[k][m] would be per-store; instead compute per store directly:
  // a warehouse feeds store m if some plant eligible for m reaches it; a dc
  // feeds m if some feeding warehouse reaches it and (dc, m) is an arc.
  std::vector<int> out;
  std::vector<std::uint8_t> warehouse_ok(static_cast<std::size_t>(inst.num_warehouses));
  std::vector<std::uint8_t> dc_ok(static_cast<std::size_t>(inst.num_dcs));
  for (int m = 0; m < inst.num_stores; ++m) {
    std::fill(warehouse_ok.begin(), warehouse_ok.end(), 0);
    std::fill(dc_ok.begin(), dc_ok.end(), 0);
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k)
        if (inst.pw.has(n, k)) warehouse_ok[static_cast<std::size_t>(k)] = 1;
    for (int k = 0; k < inst.num_warehouses; ++k)
      if (warehouse_ok[static_cast<std::size_t>(k)])
        for (int j = 0; j < inst.num_dcs; ++j)
          if (inst.wd.has(k, j)) dc_ok[static_cast<std::size_t>(j)] = 1;
    bool reachable = false;
    for (int j = 0; j < inst.num_dcs && !reachable; ++j)
      if (dc_ok[static_cast<std::size_t>(j)] && inst.ds.has(j, m)) reachable = true;
    if (reachable) out.push_back(m);
  }
  return out;
}

Instance load_instance(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open instance file: " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON parse error: ") + e.what());
  }

  Instance inst;
  require_field(j, "name");
  if (!j.at("name").is_string()) throw ParseError("field is not a string: name");
  inst.name = j.at("name").get<std::string>();

  require_field(j, "sizes");
  const json& sizes = j.at("sizes");
  inst.num_stores = static_cast<int>(get_int(sizes, "m"));
  inst.num_plants = static_cast<int>(get_int(sizes, "n"));
  inst.num_warehouses = static_cast<int>(get_int(sizes, "k"));
  inst.num_dcs = static_cast<int>(get_int(sizes, "j"));
  if (inst.num_stores <= 0 || inst.num_plants <= 0 || inst.num_warehouses <= 0 || inst.num_dcs <= 0)
    throw ParseError("sizes must be positive");

  require_field(j, "bounds");
  const json& bounds = j.at("bounds");
  inst.bound_stores = static_cast<int>(get_int(bounds, "us"));
  inst.bound_plants = static_cast<int>(get_int(bounds, "up"));
  inst.bound_warehouses = static_cast<int>(get_int(bounds, "uw"));
  inst.bound_dcs = static_cast<int>(get_int(bounds, "ud"));

  inst.revenue = get_int_array(j, "revenue", static_cast<std::size_t>(inst.num_stores), "revenue");
  require_field(j, "fixed");
  const json& fixed = j.at("fixed");
  inst.fixed_store = get_int_array(fixed, "store", static_cast<std::size_t>(inst.num_stores), "fixed.store");
  inst.fixed_plant = get_int_array(fixed, "plant", static_cast<std::size_t>(inst.num_plants), "fixed.plant");
  inst.fixed_warehouse =
      get_int_array(fixed, "warehouse", static_cast<std::size_t>(inst.num_warehouses), "fixed.warehouse");
  inst.fixed_dc = get_int_array(fixed, "dc", static_cast<std::size_t>(inst.num_dcs), "fixed.dc");

  require_field(j, "eligibility");
  const json& elig = j.at("eligibility");
  if (!elig.is_array() || elig.size() != static_cast<std::size_t>(inst.num_stores))
    throw ParseError("eligibility must be an array with one entry per store");
  inst.eligibility.resize(static_cast<std::size_t>(inst.num_stores));
  for (std::size_t m = 0; m < elig.size(); ++m) {
    if (!elig[m].is_array()) throw ParseError("eligibility entries must be arrays of plant indices");
    for (const json& v : elig[m]) {
      if (!v.is_number_integer()) throw ParseError("non-integer eligibility entry");
      const int n = v.get<int>();
      if (n < 0 || n >= inst.num_plants) {
        std::ostringstream os;
        os << "eligibility entry out of range for store " << m << ": " << n;
        throw ParseError(os.str());
      }
      inst.eligibility[m].push_back(n);
    }
  }

  inst.pw_arcs = get_arcs(j, "pw_arcs");
  inst.wd_arcs = get_arcs(j, "wd_arcs");
  inst.ds_arcs = get_arcs(j, "ds_arcs");

  try {
    inst.reindex();
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& file) {
  json j;
  j["name"] = inst.name;
  j["sizes"] = {{"m", inst.num_stores}, {"n", inst.num_plants}, {"k", inst.num_warehouses}, {"j", inst.num_dcs}};
  j["bounds"] = {{"us", inst.bound_stores},
                 {"up", inst.bound_plants},
                 {"uw", inst.bound_warehouses},
                 {"ud", inst.bound_dcs}};
  j["revenue"] = inst.revenue;
  j["fixed"] = {{"store", inst.fixed_store},
                {"plant", inst.fixed_plant},
                {"warehouse", inst.fixed_warehouse},
                {"dc", inst.fixed_dc}};
  j["eligibility"] = inst.eligibility;
  j["pw_arcs"] = arcs_to_json(inst.pw_arcs);
  j["wd_arcs"] = arcs_to_json(inst.wd_arcs);
  j["ds_arcs"] = arcs_to_json(inst.ds_arcs);

  std::ofstream out(file);
  if (!out) throw IoError("cannot open file for writing: " + file.string());
  out << j.dump(2) << "\n";
  if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace mfl
