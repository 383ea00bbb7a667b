#include "mfl/delta.hpp"

#include <sstream>

namespace mfl {

namespace {

DeltaResult rejected(MoveReject why) {
  DeltaResult r;
  r.reject = why;
  return r;
}

DeltaResult accepted(MoveDelta move) {
  DeltaResult r;
  r.move = std::move(move);
  return r;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

DeltaResult delta_close_store(const Instance& inst, const Solution& sol, int store) {
  if (!sol.is_open(store)) return rejected(MoveReject::store_state);
  const Path& p = sol.path(store);
  // Profit change of closing: lose the revenue, recover the store fixed cost,
  // the three transport legs, and the fixed cost of any facility this store
  // uses alone.
  std::int64_t delta = -inst.revenue[idx(store)] + inst.fixed_store[idx(store)] +
                       inst.pw.cost(p.plant, p.warehouse) + inst.wd.cost(p.warehouse, p.dc) +
                       inst.ds.cost(p.dc, store);
  if (sol.usage_dc[idx(p.dc)] == 1) delta += inst.fixed_dc[idx(p.dc)];
  if (sol.usage_warehouse[idx(p.warehouse)] == 1) delta += inst.fixed_warehouse[idx(p.warehouse)];
  if (sol.usage_plant[idx(p.plant)] == 1) delta += inst.fixed_plant[idx(p.plant)];

  MoveDelta move;
  move.kind = MoveKind::close_store;
  move.store = store;
  move.old_path = p;
  move.profit_delta = delta;
  return accepted(std::move(move));
}

DeltaResult delta_open_store(const Instance& inst, const Solution& sol, int store, const Path& path) {
  if (sol.is_open(store)) return rejected(MoveReject::store_state);
  if (!inst.eligible(store, path.plant)) return rejected(MoveReject::not_eligible);
  if (!inst.pw.has(path.plant, path.warehouse) || !inst.wd.has(path.warehouse, path.dc) ||
      !inst.ds.has(path.dc, store))
    return rejected(MoveReject::missing_arc);

  if (sol.open_stores + 1 > inst.bound_stores) return rejected(MoveReject::bound);
  const bool new_plant = sol.usage_plant[idx(path.plant)] == 0;
  const bool new_warehouse = sol.usage_warehouse[idx(path.warehouse)] == 0;
  const bool new_dc = sol.usage_dc[idx(path.dc)] == 0;
  if (new_plant && sol.used_plants + 1 > inst.bound_plants) return rejected(MoveReject::bound);
  if (new_warehouse && sol.used_warehouses + 1 > inst.bound_warehouses) return rejected(MoveReject::bound);
  if (new_dc && sol.used_dcs + 1 > inst.bound_dcs) return rejected(MoveReject::bound);

  std::int64_t delta = inst.revenue[idx(store)] - inst.fixed_store[idx(store)] -
                       inst.pw.cost(path.plant, path.warehouse) - inst.wd.cost(path.warehouse, path.dc) -
                       inst.ds.cost(path.dc, store);
  if (new_dc) delta -= inst.fixed_dc[idx(path.dc)];
  if (new_warehouse) delta -= inst.fixed_warehouse[idx(path.warehouse)];
  if (new_plant) delta -= inst.fixed_plant[idx(path.plant)];

  MoveDelta move;
  move.kind = MoveKind::open_store;
  move.store = store;
  move.new_path = path;
  move.profit_delta = delta;
  return accepted(std::move(move));
}

DeltaResult delta_swap_dc(const Instance& inst, const Solution& sol, int store, int new_dc) {
  if (!sol.is_open(store)) return rejected(MoveReject::store_state);
  const Path& p = sol.path(store);
  if (new_dc == p.dc) return rejected(MoveReject::same_facility);
  if (!inst.wd.has(p.warehouse, new_dc) || !inst.ds.has(new_dc, store))
    return rejected(MoveReject::missing_arc);

  const bool opens_new = sol.usage_dc[idx(new_dc)] == 0;
  const bool closes_old = sol.usage_dc[idx(p.dc)] == 1;
  if (opens_new && !closes_old && sol.used_dcs + 1 > inst.bound_dcs) return rejected(MoveReject::bound);

  std::int64_t delta = inst.ds.cost(p.dc, store) - inst.ds.cost(new_dc, store) +
                       inst.wd.cost(p.warehouse, p.dc) - inst.wd.cost(p.warehouse, new_dc);
  if (closes_old) delta += inst.fixed_dc[idx(p.dc)];
  if (opens_new) delta -= inst.fixed_dc[idx(new_dc)];

  MoveDelta move;
  move.kind = MoveKind::swap_dc;
  move.store = store;
  move.old_path = p;
  move.new_path = Path{p.plant, p.warehouse, new_dc};
  move.profit_delta = delta;
  return accepted(std::move(move));
}

DeltaResult delta_swap_warehouse(const Instance& inst, const Solution& sol, int store, int new_warehouse) {
  if (!sol.is_open(store)) return rejected(MoveReject::store_state);
  const Path& p = sol.path(store);
  if (new_warehouse == p.warehouse) return rejected(MoveReject::same_facility);
  if (!inst.pw.has(p.plant, new_warehouse) || !inst.wd.has(new_warehouse, p.dc))
    return rejected(MoveReject::missing_arc);

  const bool opens_new = sol.usage_warehouse[idx(new_warehouse)] == 0;
  const bool closes_old = sol.usage_warehouse[idx(p.warehouse)] == 1;
  if (opens_new && !closes_old && sol.used_warehouses + 1 > inst.bound_warehouses)
    return rejected(MoveReject::bound);

  std::int64_t delta = inst.pw.cost(p.plant, p.warehouse) - inst.pw.cost(p.plant, new_warehouse) +
                       inst.wd.cost(p.warehouse, p.dc) - inst.wd.cost(new_warehouse, p.dc);
  if (closes_old) delta += inst.fixed_warehouse[idx(p.warehouse)];
  if (opens_new) delta -= inst.fixed_warehouse[idx(new_warehouse)];

  MoveDelta move;
  move.kind = MoveKind::swap_warehouse;
  move.store = store;
  move.old_path = p;
  move.new_path = Path{p.plant, new_warehouse, p.dc};
  move.profit_delta = delta;
  return accepted(std::move(move));
}

DeltaResult delta_swap_plant(const Instance& inst, const Solution& sol, int store, int new_plant) {
  if (!sol.is_open(store)) return rejected(MoveReject::store_state);
  const Path& p = sol.path(store);
  if (new_plant == p.plant) return rejected(MoveReject::same_facility);
  if (!inst.eligible(store, new_plant)) return rejected(MoveReject::not_eligible);
  if (!inst.pw.has(new_plant, p.warehouse)) return rejected(MoveReject::missing_arc);

  const bool opens_new = sol.usage_plant[idx(new_plant)] == 0;
  const bool closes_old = sol.usage_plant[idx(p.plant)] == 1;
  if (opens_new && !closes_old && sol.used_plants + 1 > inst.bound_plants)
    return rejected(MoveReject::bound);

  std::int64_t delta = inst.pw.cost(p.plant, p.warehouse) - inst.pw.cost(new_plant, p.warehouse);
  if (closes_old) delta += inst.fixed_plant[idx(p.plant)];
  if (opens_new) delta -= inst.fixed_plant[idx(new_plant)];

  MoveDelta move;
  move.kind = MoveKind::swap_plant;
  move.store = store;
  move.old_path = p;
  move.new_path = Path{new_plant, p.warehouse, p.dc};
  move.profit_delta = delta;
  return accepted(std::move(move));
}

namespace {

[[noreturn]] void stale(const MoveDelta& move, const char* why) {
  std::ostringstream os;
  os << "stale move for store " << move.store << ": " << why;
  throw StaleMoveError(os.str());
}

void detach_path(Solution& sol, const Path& p) {
  if (--sol.usage_plant[idx(p.plant)] == 0) --sol.used_plants;
  if (--sol.usage_warehouse[idx(p.warehouse)] == 0) --sol.used_warehouses;
  if (--sol.usage_dc[idx(p.dc)] == 0) --sol.used_dcs;
}

void attach_path(Solution& sol, const Path& p) {
  if (sol.usage_plant[idx(p.plant)]++ == 0) ++sol.used_plants;
  if (sol.usage_warehouse[idx(p.warehouse)]++ == 0) ++sol.used_warehouses;
  if (sol.usage_dc[idx(p.dc)]++ == 0) ++sol.used_dcs;
}

}  // namespace

void apply_move(const Instance& inst, Solution& sol, const MoveDelta& move) {
  auto& slot = sol.assignment[idx(move.store)];
  switch (move.kind) {
    case MoveKind::close_store:
      if (!slot) stale(move, "store is no longer open");
      if (*slot != *move.old_path) stale(move, "path changed since the move was computed");
      detach_path(sol, *slot);
      slot.reset();
      --sol.open_stores;
      break;
    case MoveKind::open_store: {
      if (slot) stale(move, "store is no longer closed");
      const Path& p = *move.new_path;
      // Bounds may have been consumed by other moves since this one was
      // computed; recheck the O(1) conditions rather than corrupt the state.
      if (sol.open_stores + 1 > inst.bound_stores) stale(move, "store bound consumed");
      if (sol.usage_plant[idx(p.plant)] == 0 && sol.used_plants + 1 > inst.bound_plants)
        stale(move, "plant bound consumed");
      if (sol.usage_warehouse[idx(p.warehouse)] == 0 && sol.used_warehouses + 1 > inst.bound_warehouses)
        stale(move, "warehouse bound consumed");
      if (sol.usage_dc[idx(p.dc)] == 0 && sol.used_dcs + 1 > inst.bound_dcs)
        stale(move, "dc bound consumed");
      attach_path(sol, p);
      slot = p;
      ++sol.open_stores;
      break;
    }
    case MoveKind::swap_dc:
    case MoveKind::swap_warehouse:
    case MoveKind::swap_plant: {
      if (!slot) stale(move, "store is no longer open");
      if (*slot != *move.old_path) stale(move, "path changed since the move was computed");
      const Path& p = *move.new_path;
      const Path& old = *move.old_path;
      // Same recheck as open: another move may have consumed the relevant bound.
      if (sol.usage_plant[idx(p.plant)] == 0 && !(sol.usage_plant[idx(old.plant)] == 1) &&
          sol.used_plants + 1 > inst.bound_plants)
        stale(move, "plant bound consumed");
      if (sol.usage_warehouse[idx(p.warehouse)] == 0 && !(sol.usage_warehouse[idx(old.warehouse)] == 1) &&
          sol.used_warehouses + 1 > inst.bound_warehouses)
        stale(move, "warehouse bound consumed");
      if (sol.usage_dc[idx(p.dc)] == 0 && !(sol.usage_dc[idx(old.dc)] == 1) &&
          sol.used_dcs + 1 > inst.bound_dcs)
        stale(move, "dc bound consumed");
      detach_path(sol, old);
      attach_path(sol, p);
      slot = p;
      break;
    }
  }
  sol.objective += move.profit_delta;
}

}  // namespace mfl
