#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "mfl/delta.hpp"
#include "mfl/run_record.hpp"
#include "mfl/sequence.hpp"
#include "mfl/solution.hpp"

namespace mfl {

struct LsConfig {
  std::uint64_t seed = 0;
  std::optional<int> max_passes;                 // cap on improvement passes
  std::optional<double> time_budget_seconds;     // checked between passes
  bool reseq = true;                             // false = sequences frozen at the initial draw
};

// One first-improvement sweep. Two sub-sweeps over stores in ls order:
// first open/close flips (close an open store if that improves; otherwise for
// a closed store take the first improving feasible path scanning ld outer,
// lw middle, lp inner), then the three swap scans per open store (dc over ld,
// warehouse over lw, plant over lp) where the first improving move ends that
// store's examination. When reseq is on, the sequences are re-diversified
// between the sub-sweeps and again at the end of the pass. Every applied move
// strictly improves the objective. Returns whether anything was applied;
// applied_moves, when given, is incremented per applied move, and on_apply,
// when given, runs after each applied move (used for best/time bookkeeping).
bool improve_pass(const Instance& inst, Solution& sol, SequenceSet& seqs, Rng& rng, bool reseq = true,
                  std::int64_t* applied_moves = nullptr,
                  const std::function<void()>& on_apply = {});

// First feasible strictly-improving opening move for a closed store (dcs in
// ld order, warehouses in lw, plants in lp); applies it and reports whether
// one was found. Also the building block of the greedy constructor.
bool open_first_improving_path(const Instance& inst, Solution& sol, const SequenceSet& seqs, int store);

// Repeats improve_pass from the all-closed solution until a pass applies
// nothing (single-move local optimum) or a cap triggers.
std::pair<Solution, RunRecord> run_local_search(const Instance& inst, const LsConfig& config);

}  // namespace mfl
