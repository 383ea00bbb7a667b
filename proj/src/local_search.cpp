#include "mfl/local_search.hpp"

#include <chrono>

namespace mfl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

// Arc existence is checked outside-in so missing legs prune whole subtrees.
bool open_first_improving_path(const Instance& inst, Solution& sol, const SequenceSet& seqs, int store) {
  for (int j : seqs.ld) {
    if (!inst.ds.has(j, store)) continue;
    for (int k : seqs.lw) {
      if (!inst.wd.has(k, j)) continue;
      for (int n : seqs.lp) {
        if (!inst.eligible(store, n) || !inst.pw.has(n, k)) continue;
        DeltaResult r = delta_open_store(inst, sol, store, Path{n, k, j});
        if (r.ok() && r.delta() > 0) {
          apply_move(inst, sol, *r.move);
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

bool try_swaps(const Instance& inst, Solution& sol, const SequenceSet& seqs, int store) {
  for (int j : seqs.ld) {
    DeltaResult r = delta_swap_dc(inst, sol, store, j);
    if (r.ok() && r.delta() > 0) {
      apply_move(inst, sol, *r.move);
      return true;
    }
  }
  for (int k : seqs.lw) {
    DeltaResult r = delta_swap_warehouse(inst, sol, store, k);
    if (r.ok() && r.delta() > 0) {
      apply_move(inst, sol, *r.move);
      return true;
    }
  }
  for (int n : seqs.lp) {
    DeltaResult r = delta_swap_plant(inst, sol, store, n);
    if (r.ok() && r.delta() > 0) {
      apply_move(inst, sol, *r.move);
      return true;
    }
  }
  return false;
}

}  // namespace

bool improve_pass(const Instance& inst, Solution& sol, SequenceSet& seqs, Rng& rng, bool reseq,
                  std::int64_t* applied_moves, const std::function<void()>& on_apply) {
  std::int64_t applied = 0;
  auto note_apply = [&] {
    ++applied;
    if (on_apply) on_apply();
  };

  // Sub-sweep 1: open/close flips.
  for (std::size_t pos = 0; pos < seqs.ls.size(); ++pos) {
    const int store = seqs.ls[pos];
    if (sol.is_open(store)) {
      DeltaResult r = delta_close_store(inst, sol, store);
      if (r.ok() && r.delta() > 0) {
        apply_move(inst, sol, *r.move);
        note_apply();
      }
    } else if (open_first_improving_path(inst, sol, seqs, store)) {
      note_apply();
    }
  }
  if (reseq) diversify(seqs, rng);

  // Sub-sweep 2: path swaps for open stores.
  for (std::size_t pos = 0; pos < seqs.ls.size(); ++pos) {
    const int store = seqs.ls[pos];
    if (!sol.is_open(store)) continue;
    if (try_swaps(inst, sol, seqs, store)) note_apply();
  }
  if (reseq) diversify(seqs, rng);

  if (applied_moves) *applied_moves += applied;
  return applied > 0;
}

std::pair<Solution, RunRecord> run_local_search(const Instance& inst, const LsConfig& config) {
  if (config.max_passes && *config.max_passes < 0) throw ParamError("max_passes must be non-negative");
  if (config.time_budget_seconds && *config.time_budget_seconds <= 0)
    throw ParamError("time_budget_seconds must be positive");
  if (!inst.indexed()) throw StructuralError("instance is not indexed");

  const auto t0 = Clock::now();
  Rng rng(config.seed);
  SequenceSet seqs = random_sequences(inst, rng);
  Solution sol = empty_solution(inst);

  RunRecord rec;
  rec.instance_name = inst.name;
  rec.algorithm = config.reseq ? "ls_seq" : "ls_noseq";
  rec.seed = config.seed;

  // Moves only ever improve, so the time of the last applied move is when the
  // final objective was first reached.
  double tb = 0.0;
  const auto stamp = [&] { tb = seconds_since(t0); };
  int passes = 0;
  while (true) {
    if (config.max_passes && passes >= *config.max_passes) break;
    if (config.time_budget_seconds && seconds_since(t0) >= *config.time_budget_seconds) break;
    if (!improve_pass(inst, sol, seqs, rng, config.reseq, &rec.iterations, stamp)) break;
    ++passes;
  }

  rec.bfs = sol.objective;
  rec.tb_seconds = tb;
  rec.wall_seconds = seconds_since(t0);
  return {std::move(sol), std::move(rec)};
}

}  // namespace mfl
