#include "mfl/sequence.hpp"

#include <algorithm>

namespace mfl {

SequenceSet random_sequences(const Instance& inst, Rng& rng) {
  SequenceSet seqs;
  seqs.ls = identity_permutation(inst.num_stores);
  seqs.lp = identity_permutation(inst.num_plants);
  seqs.lw = identity_permutation(inst.num_warehouses);
  seqs.ld = identity_permutation(inst.num_dcs);
  shuffle(seqs.ls, rng);
  shuffle(seqs.lp, rng);
  shuffle(seqs.lw, rng);
  shuffle(seqs.ld, rng);
  return seqs;
}

std::vector<int> double_bridge_at(std::vector<int> perm, int a, int b, int c) {
  std::vector<int> out;
  out.reserve(perm.size());
  auto first = perm.begin();
  out.insert(out.end(), first, first + a);
  out.insert(out.end(), first + b, first + c);
  out.insert(out.end(), first + a, first + b);
  out.insert(out.end(), first + c, perm.end());
  return out;
}

std::vector<int> double_bridge(std::vector<int> perm, Rng& rng) {
  const int len = static_cast<int>(perm.size());
  if (len < 4) return perm;
  // Three distinct interior cut points, drawn by rejection then sorted.
  int cuts[3];
  do {
    for (int& c : cuts) c = static_cast<int>(rand_int(rng, 1, len - 1));
  } while (cuts[0] == cuts[1] || cuts[0] == cuts[2] || cuts[1] == cuts[2]);
  std::sort(std::begin(cuts), std::end(cuts));
  return double_bridge_at(std::move(perm), cuts[0], cuts[1], cuts[2]);
}

void diversify(SequenceSet& seqs, Rng& rng) {
  seqs.ls = double_bridge(std::move(seqs.ls), rng);
  seqs.lp = double_bridge(std::move(seqs.lp), rng);
  seqs.lw = double_bridge(std::move(seqs.lw), rng);
  seqs.ld = double_bridge(std::move(seqs.ld), rng);
}

}  // namespace mfl
