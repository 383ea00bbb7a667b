#pragma once

#include <vector>

#include "mfl/instance.hpp"
#include "mfl/rng.hpp"

namespace mfl {

// Scan orders the searches walk: stores (ls), plants (lp), warehouses (lw),
// dcs (ld). Each is a permutation of 0..size-1.
struct SequenceSet {
  std::vector<int> ls;
  std::vector<int> lp;
  std::vector<int> lw;
  std::vector<int> ld;
};

SequenceSet random_sequences(const Instance& inst, Rng& rng);

// Classic four-segment reconnection: cut at 0 < a < b < c < len into
// A|B|C|D and reassemble as A|C|B|D. Permutations shorter than 4 are
// returned unchanged (no valid cut triple exists).
std::vector<int> double_bridge(std::vector<int> perm, Rng& rng);

// Deterministic variant with explicit cut points; the random version and the
// tests share it.
std::vector<int> double_bridge_at(std::vector<int> perm, int a, int b, int c);

// One double bridge applied to each of the four permutations (ls, lp, lw, ld
// in that order — the order is part of the reproducibility contract).
void diversify(SequenceSet& seqs, Rng& rng);

}  // namespace mfl
