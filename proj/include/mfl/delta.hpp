#pragma once

#include <cstdint>
#include <optional>

#include "mfl/solution.hpp"

namespace mfl {

enum class MoveKind { close_store, open_store, swap_dc, swap_warehouse, swap_plant };

// Why a candidate move cannot be applied to the current solution. These are
// ordinary outcomes of neighborhood scans, not errors.
enum class MoveReject {
  none,
  store_state,    // close on a closed store / open on an open one / swap on a closed one
  same_facility,  // swap target equals the current facility
  not_eligible,   // plant not allowed to serve this store
  missing_arc,    // some leg of the candidate path does not exist
  bound,          // a cardinality bound would be exceeded
};

struct MoveDelta {
  MoveKind kind{};
  int store = -1;
  std::optional<Path> old_path;  // state the move was computed against
  std::optional<Path> new_path;  // state after the move
  std::int64_t profit_delta = 0; // positive = improvement
};

struct DeltaResult {
  std::optional<MoveDelta> move;
  MoveReject reject = MoveReject::none;
  bool ok() const { return move.has_value(); }
  std::int64_t delta() const { return move->profit_delta; }
};

// All five evaluators are O(1): they read only the candidate costs and the
// solution's cached usage counts. Each returns either the exact objective
// change of the move or the reason it is inapplicable. Cardinality bounds are
// enforced here (an over-bound move is inapplicable), so apply sites never
// need to re-check feasibility.
DeltaResult delta_close_store(const Instance& inst, const Solution& sol, int store);
DeltaResult delta_open_store(const Instance& inst, const Solution& sol, int store, const Path& path);
DeltaResult delta_swap_dc(const Instance& inst, const Solution& sol, int store, int new_dc);
DeltaResult delta_swap_warehouse(const Instance& inst, const Solution& sol, int store, int new_warehouse);
DeltaResult delta_swap_plant(const Instance& inst, const Solution& sol, int store, int new_plant);

// Applies a previously computed move, updating the assignment, usage counts
// and cached objective in O(1). Throws StaleMoveError if the solution no
// longer matches the state the move was computed against (store state or path
// changed, or a bound consumed by other moves in the meantime).
void apply_move(const Instance& inst, Solution& sol, const MoveDelta& move);

}  // namespace mfl
