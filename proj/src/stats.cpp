#include "mfl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "mfl/errors.hpp"

namespace mfl {

namespace {

std::vector<double> diffs_of(const PairedSample& sample) {
  if (sample.a.size() != sample.b.size()) throw ParamError("paired sample: lengths differ");
  std::vector<double> d(sample.a.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = sample.b[i] - sample.a[i];
  return d;
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sum_sq_dev(std::span<const double> v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s;
}

}  // namespace

Descriptive descriptive(const PairedSample& sample) {
  const std::vector<double> d = diffs_of(sample);
  if (d.empty()) throw ParamError("paired sample: empty");
  Descriptive out;
  out.mean_diff = mean_of(d);
  out.stdev_diff = std::sqrt(sum_sq_dev(d, out.mean_diff) / static_cast<double>(d.size()));
  // A zero baseline mean makes the relative column meaningless; report 0
  // rather than failing so the remaining (well-defined) cells survive.
  const double baseline = mean_of(sample.a);
  out.pct_of_baseline = baseline == 0.0 ? 0.0 : std::abs(out.mean_diff) / baseline;
  return out;
}

TTestResult paired_t(const PairedSample& sample) {
  const std::vector<double> d = diffs_of(sample);
  const auto n = d.size();
  if (n < 2) throw ParamError("paired t test: need at least 2 pairs");
  const double mean = mean_of(d);
  const double var = sum_sq_dev(d, mean) / static_cast<double>(n - 1);
  if (var == 0.0) throw ParamError("paired t test: zero-variance differences");
  TTestResult out;
  out.df = static_cast<int>(n) - 1;
  out.t = mean / std::sqrt(var / static_cast<double>(n));
  const boost::math::students_t dist(static_cast<double>(out.df));
  out.p_two_sided = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t)));
  return out;
}

double anova_f(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw ParamError("anova: each group needs at least 2 values");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double mean_a = mean_of(a);
  const double mean_b = mean_of(b);
  const double grand = (na * mean_a + nb * mean_b) / (na + nb);
  const double ssb = na * (mean_a - grand) * (mean_a - grand) + nb * (mean_b - grand) * (mean_b - grand);
  const double ssw = sum_sq_dev(a, mean_a) + sum_sq_dev(b, mean_b);
  const double msb = ssb / 1.0;  // 2 groups - 1
  const double msw = ssw / (na + nb - 2.0);
  if (msw == 0.0) throw ParamError("anova: zero within-group variance");
  return msb / msw;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs) {
  std::vector<double> d;
  for (double x : diffs)
    if (x != 0.0) d.push_back(x);
  if (d.empty()) throw ParamError("wilcoxon: all differences are zero");

  const int n = static_cast<int>(d.size());
  // Ranks of |d| with ties averaged. Doubling makes every rank an integer
  // (averaged ranks are multiples of 1/2), which keeps the DP exact.
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int i, int j) { return std::abs(d[static_cast<std::size_t>(i)]) < std::abs(d[static_cast<std::size_t>(j)]); });
  std::vector<double> rank(d.size());
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    const double v = std::abs(d[static_cast<std::size_t>(order[lo])]);
    while (hi + 1 < order.size() && std::abs(d[static_cast<std::size_t>(order[hi + 1])]) == v) ++hi;
    const double avg = (static_cast<double>(lo + 1) + static_cast<double>(hi + 1)) / 2.0;
    for (std::size_t i = lo; i <= hi; ++i) rank[static_cast<std::size_t>(order[i])] = avg;
    lo = hi + 1;
  }

  WilcoxonResult out;
  out.n_used = n;
  double w_plus = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 0.0) w_plus += rank[i];
  out.w_plus = w_plus;

  if (n <= 25) {
    out.exact = true;
    // counts[s] = number of sign assignments with doubled positive-rank sum s.
    const int total2 = n * (n + 1);  // sum of doubled ranks
    std::vector<double> counts(static_cast<std::size_t>(total2) + 1, 0.0);
    counts[0] = 1.0;
    int upper = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int r2 = static_cast<int>(std::lround(2.0 * rank[i]));
      upper += r2;
      for (int s = upper; s >= r2; --s) counts[static_cast<std::size_t>(s)] += counts[static_cast<std::size_t>(s - r2)];
    }
    const double denom = std::ldexp(1.0, n);  // 2^n
    const int w2 = static_cast<int>(std::lround(2.0 * w_plus));
    double below = 0.0, above = 0.0;
    for (int s = 0; s <= total2; ++s) {
      if (s <= w2) below += counts[static_cast<std::size_t>(s)];
      if (s >= w2) above += counts[static_cast<std::size_t>(s)];
    }
    out.p_two_sided = std::min(1.0, 2.0 * std::min(below, above) / denom);
  } else {
    out.exact = false;
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1.0) / 4.0;
    double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0;
    // Tie correction: subtract sum(t^3 - t)/48 over tie groups.
    std::vector<double> sorted_abs(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) sorted_abs[i] = std::abs(d[i]);
    std::sort(sorted_abs.begin(), sorted_abs.end());
    for (std::size_t lo = 0; lo < sorted_abs.size();) {
      std::size_t hi = lo;
      while (hi + 1 < sorted_abs.size() && sorted_abs[hi + 1] == sorted_abs[lo]) ++hi;
      const double t = static_cast<double>(hi - lo + 1);
      var -= (t * t * t - t) / 48.0;
      lo = hi + 1;
    }
    if (var <= 0.0) throw ParamError("wilcoxon: zero variance after tie correction");
    const double z = (std::abs(w_plus - mean) - 0.5) / std::sqrt(var);
    out.p_two_sided = std::min(1.0, std::erfc(std::max(0.0, z) / std::sqrt(2.0)));
  }
  return out;
}

WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample) {
  const std::vector<double> d = diffs_of(sample);
  return wilcoxon_signed_rank(std::span<const double>(d));
}

}  // namespace mfl
