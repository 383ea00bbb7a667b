#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

#include "mfl/local_search.hpp"

namespace mfl {

// Per-store tabu memory. A store is tabu while iteration < expiry[store];
// iteration is the global accepted-move counter for the whole run (the state
// persists across restarts).
struct TabuState {
  std::vector<std::int64_t> expiry;
  int tenure = 1;
  std::int64_t iteration = 0;

  explicit TabuState(int num_stores, int tenure_moves)
      : expiry(static_cast<std::size_t>(num_stores), 0), tenure(tenure_moves) {}
  bool is_tabu(int store) const { return iteration < expiry[static_cast<std::size_t>(store)]; }
  void mark(int store) { expiry[static_cast<std::size_t>(store)] = iteration + tenure; }
};

// max(1, round(0.025 * num_stores))
int default_tenure(int num_stores);

struct TabuConfig {
  std::uint64_t seed = 0;
  std::optional<int> max_starts;
  // Budgets are checked between descents; a descent in progress always runs
  // to its local stopping point. When neither budget nor max_starts is set,
  // the time budget defaults to 2.0 seconds. An iteration budget (accepted
  // moves) gives bit-reproducible runs.
  std::optional<double> time_budget_seconds;
  std::optional<std::int64_t> iter_budget;
  std::optional<int> shake_low;   // default 1
  std::optional<int> shake_high;  // default max(2, round(0.05 * num_stores))
  std::optional<int> tenure_override;
};

// Greedy construction: scan stores in ls order; open each closed store via
// the first feasible strictly-profitable path (ld/lw/lp order). Deterministic
// given the sequences.
Solution initial_solution(const Instance& inst, const SequenceSet& seqs);

// Book-keeping shared between run_tabu and tabu_descent: the global best
// objective (the aspiration threshold), when it was first reached, and the
// accepted-move total.
struct BestTracker {
  std::int64_t best_objective = 0;
  double tb_seconds = 0.0;
  std::chrono::steady_clock::time_point t0;
  std::int64_t accepted_moves = 0;
};

// Sweeps like improve_pass until nothing is accepted, with the flip rule:
// an open/close flip of store g is accepted only when [it strictly improves
// the current objective AND g is not tabu] OR [the resulting objective
// strictly exceeds the global best]. Every accepted flip marks its store tabu
// for tenure accepted moves. Swap moves are accepted whenever strictly
// improving, bypassing the tabu list. The tracker's best objective and time
// stamp are updated whenever exceeded.
void tabu_descent(const Instance& inst, Solution& sol, SequenceSet& seqs, TabuState& state,
                  BestTracker& best, Rng& rng);

// r random applicable store flips, r uniform in [low, high]: close a random
// open store, or open a random closed store via a random feasible path within
// bounds, regardless of profit. The result is always feasible. flips_out,
// when given, receives the number of flips actually performed.
Solution shake(const Instance& inst, const Solution& start, Rng& rng, int low, int high,
               int* flips_out = nullptr);

// Multi-start tabu search: greedy start, then repeatedly {descend, record
// best, re-diversify sequences, shake} until max_starts or a budget expires.
std::pair<Solution, RunRecord> run_tabu(const Instance& inst, const TabuConfig& config);

}  // namespace mfl
