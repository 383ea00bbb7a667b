#include "mfl/tabu_search.hpp"

#include <cmath>

namespace mfl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void accept(const Instance& inst, Solution& sol, const MoveDelta& move, BestTracker& best) {
  apply_move(inst, sol, move);
  ++best.accepted_moves;
  if (sol.objective > best.best_objective) {
    best.best_objective = sol.objective;
    best.tb_seconds = seconds_since(best.t0);
  }
}

// Flip acceptance: improving and not tabu, or beats the global best
// (aspiration). best_objective >= current objective always, so every
// accepted flip strictly improves the current solution.
bool flip_acceptable(const Solution& sol, const TabuState& state, const BestTracker& best,
                     const MoveDelta& move) {
  if (move.profit_delta > 0 && !state.is_tabu(move.store)) return true;
  return sol.objective + move.profit_delta > best.best_objective;
}

bool try_flip(const Instance& inst, Solution& sol, const SequenceSet& seqs, TabuState& state,
              BestTracker& best, int store) {
  if (sol.is_open(store)) {
    DeltaResult r = delta_close_store(inst, sol, store);
    if (r.ok() && flip_acceptable(sol, state, best, *r.move)) {
      accept(inst, sol, *r.move, best);
      ++state.iteration;
      state.mark(store);
      return true;
    }
    return false;
  }
  for (int j : seqs.ld) {
    if (!inst.ds.has(j, store)) continue;
    for (int k : seqs.lw) {
      if (!inst.wd.has(k, j)) continue;
      for (int n : seqs.lp) {
        if (!inst.eligible(store, n) || !inst.pw.has(n, k)) continue;
        DeltaResult r = delta_open_store(inst, sol, store, Path{n, k, j});
        if (r.ok() && flip_acceptable(sol, state, best, *r.move)) {
          accept(inst, sol, *r.move, best);
          ++state.iteration;
          state.mark(store);
          return true;
        }
      }
    }
  }
  return false;
}

bool try_swaps(const Instance& inst, Solution& sol, const SequenceSet& seqs, TabuState& state,
               BestTracker& best, int store) {
  for (int j : seqs.ld) {
    DeltaResult r = delta_swap_dc(inst, sol, store, j);
    if (r.ok() && r.delta() > 0) {
      accept(inst, sol, *r.move, best);
      ++state.iteration;
      return true;
    }
  }
  for (int k : seqs.lw) {
    DeltaResult r = delta_swap_warehouse(inst, sol, store, k);
    if (r.ok() && r.delta() > 0) {
      accept(inst, sol, *r.move, best);
      ++state.iteration;
      return true;
    }
  }
  for (int n : seqs.lp) {
    DeltaResult r = delta_swap_plant(inst, sol, store, n);
    if (r.ok() && r.delta() > 0) {
      accept(inst, sol, *r.move, best);
      ++state.iteration;
      return true;
    }
  }
  return false;
}

// Opens a closed store through the first feasible path found while scanning
// dcs, warehouses and plants in freshly shuffled orders. Profit is ignored;
// bounds are respected (delta_open_store rejects over-bound paths).
bool open_random_path(const Instance& inst, Solution& sol, int store, Rng& rng) {
  if (sol.open_stores + 1 > inst.bound_stores) return false;
  std::vector<int> ld = identity_permutation(inst.num_dcs);
  std::vector<int> lw = identity_permutation(inst.num_warehouses);
  std::vector<int> lp = identity_permutation(inst.num_plants);
  shuffle(ld, rng);
  shuffle(lw, rng);
  shuffle(lp, rng);
  for (int j : ld) {
    if (!inst.ds.has(j, store)) continue;
    for (int k : lw) {
      if (!inst.wd.has(k, j)) continue;
      for (int n : lp) {
        if (!inst.eligible(store, n) || !inst.pw.has(n, k)) continue;
        DeltaResult r = delta_open_store(inst, sol, store, Path{n, k, j});
        if (r.ok()) {
          apply_move(inst, sol, *r.move);
          return true;
        }
      }
    }
  }
  return false;
}

// True when no store flip is applicable at all: every store is closed and
// none admits an opening move (no feasible path, or a zero cardinality
// bound). The empty solution is then the entire reachable search space, so
// restarting cannot make progress.
bool no_flip_applicable(const Instance& inst, const Solution& sol) {
  for (int m = 0; m < inst.num_stores; ++m) {
    if (sol.is_open(m)) return false;  // a close flip always applies
    for (int n : inst.eligibility[static_cast<std::size_t>(m)])
      for (int k = 0; k < inst.num_warehouses; ++k) {
        if (!inst.pw.has(n, k)) continue;
        for (int j = 0; j < inst.num_dcs; ++j) {
          if (!inst.wd.has(k, j) || !inst.ds.has(j, m)) continue;
          if (delta_open_store(inst, sol, m, Path{n, k, j}).ok()) return false;
        }
      }
  }
  return true;
}

}  // namespace

int default_tenure(int num_stores) {
  return std::max(1, static_cast<int>(std::lround(0.025 * num_stores)));
}

Solution initial_solution(const Instance& inst, const SequenceSet& seqs) {
  Solution sol = empty_solution(inst);
  for (int store : seqs.ls) {
    if (!sol.is_open(store)) open_first_improving_path(inst, sol, seqs, store);
  }
  return sol;
}

void tabu_descent(const Instance& inst, Solution& sol, SequenceSet& seqs, TabuState& state,
                  BestTracker& best, Rng& rng) {
  bool any;
  do {
    any = false;
    for (std::size_t pos = 0; pos < seqs.ls.size(); ++pos)
      if (try_flip(inst, sol, seqs, state, best, seqs.ls[pos])) any = true;
    diversify(seqs, rng);
    for (std::size_t pos = 0; pos < seqs.ls.size(); ++pos) {
      const int store = seqs.ls[pos];
      if (sol.is_open(store) && try_swaps(inst, sol, seqs, state, best, store)) any = true;
    }
    diversify(seqs, rng);
  } while (any);
}

Solution shake(const Instance& inst, const Solution& start, Rng& rng, int low, int high,
               int* flips_out) {
  if (low < 0 || high < low) throw ParamError("shake range invalid: need 0 <= low <= high");
  Solution sol = start;
  const int r = static_cast<int>(rand_int(rng, low, high));
  int flips = 0;
  std::vector<int> order = identity_permutation(inst.num_stores);
  for (int i = 0; i < r; ++i) {
    shuffle(order, rng);
    bool flipped = false;
    for (int store : order) {
      if (sol.is_open(store)) {
        DeltaResult res = delta_close_store(inst, sol, store);
        apply_move(inst, sol, *res.move);
        flipped = true;
      } else if (open_random_path(inst, sol, store, rng)) {
        flipped = true;
      }
      if (flipped) break;
    }
    if (!flipped) break;  // no applicable flip exists anywhere
    ++flips;
  }
  if (flips_out) *flips_out = flips;
  return sol;
}

std::pair<Solution, RunRecord> run_tabu(const Instance& inst, const TabuConfig& config) {
  if (!inst.indexed()) throw StructuralError("instance is not indexed");
  if (config.max_starts && *config.max_starts <= 0) throw ParamError("max_starts must be positive");
  if (config.time_budget_seconds && *config.time_budget_seconds <= 0)
    throw ParamError("time_budget_seconds must be positive");
  if (config.iter_budget && *config.iter_budget <= 0) throw ParamError("iter_budget must be positive");
  if (config.tenure_override && *config.tenure_override < 1)
    throw ParamError("tenure_override must be at least 1");

  const int low = config.shake_low.value_or(1);
  const int high =
      config.shake_high.value_or(std::max(2, static_cast<int>(std::lround(0.05 * inst.num_stores))));
  if (low < 0 || high < low) throw ParamError("shake range invalid: need 0 <= shake_low <= shake_high");

  std::optional<double> time_budget = config.time_budget_seconds;
  if (!time_budget && !config.iter_budget && !config.max_starts) time_budget = 2.0;

  RunRecord rec;
  rec.instance_name = inst.name;
  rec.algorithm = "tabu_seq";
  rec.seed = config.seed;

  Rng rng(config.seed);
  TabuState state(inst.num_stores, config.tenure_override.value_or(default_tenure(inst.num_stores)));

  BestTracker best;
  best.t0 = Clock::now();

  SequenceSet seqs = random_sequences(inst, rng);
  Solution sol = initial_solution(inst, seqs);
  best.accepted_moves += sol.open_stores;  // greedy construction moves
  best.best_objective = sol.objective;
  best.tb_seconds = seconds_since(best.t0);

  Solution best_sol = sol;
  int starts = 0;
  while (true) {
    const std::int64_t best_before = best.best_objective;
    tabu_descent(inst, sol, seqs, state, best, rng);
    // Within a descent the objective only rises, so when the global best
    // moved, the descent's end state is exactly the new best.
    if (best.best_objective > best_before) best_sol = sol;
    ++starts;

    if (config.max_starts && starts >= *config.max_starts) break;
    if (config.iter_budget && best.accepted_moves >= *config.iter_budget) break;
    if (time_budget && seconds_since(best.t0) >= *time_budget) break;

    diversify(seqs, rng);
    int flips = 0;
    sol = shake(inst, sol, rng, low, high, &flips);
    best.accepted_moves += flips;
    // A shake that flipped nothing on a solution admitting no flip at all
    // means the search space is exhausted; without this check an
    // iteration-budget run would spin forever on such instances.
    if (flips == 0 && no_flip_applicable(inst, sol)) break;
  }

  rec.bfs = best_sol.objective;
  rec.tb_seconds = best.tb_seconds;
  rec.iterations = best.accepted_moves;
  rec.wall_seconds = seconds_since(best.t0);
  return {std::move(best_sol), std::move(rec)};
}

}  // namespace mfl
