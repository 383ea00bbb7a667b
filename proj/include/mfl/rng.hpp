#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace mfl {

using Rng = std::mt19937_64;

// Unbiased integer in [lo, hi]. Hand-rolled rejection sampling instead of
// std::uniform_int_distribution so that streams are identical across standard
// libraries, which the reproducibility guarantees depend on.
inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  const std::uint64_t max_valid = (std::numeric_limits<std::uint64_t>::max() / span) * span;
  std::uint64_t x = rng();
  while (x >= max_valid) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

// True with probability p. One 53-bit draw per call.
inline bool rand_bernoulli(Rng& rng, double p) {
  return (rng() >> 11) * 0x1.0p-53 < p;
}

// Fisher-Yates; same caveat as rand_int regarding std::shuffle portability.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rand_int(rng, 0, static_cast<std::int64_t>(i) - 1));
    std::swap(v[i - 1], v[j]);
  }
}

inline std::vector<int> identity_permutation(int len) {
  std::vector<int> v(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace mfl
