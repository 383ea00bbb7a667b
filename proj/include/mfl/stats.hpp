#pragma once

#include <span>
#include <vector>

namespace mfl {

// Two paired series of equal length; differences are taken b - a.
struct PairedSample {
  std::vector<double> a;
  std::vector<double> b;
};

struct Descriptive {
  double mean_diff = 0.0;
  double stdev_diff = 0.0;       // population standard deviation (divide by n)
  double pct_of_baseline = 0.0;  // |mean_diff| / mean(a), as a fraction
};

Descriptive descriptive(const PairedSample& sample);

struct TTestResult {
  double t = 0.0;
  double p_two_sided = 1.0;
  int df = 0;
};

// Paired two-sided t test on b - a; the standard deviation here is the sample
// one (divide by n-1). Throws ParamError on mismatched lengths, n < 2, or
// zero-variance differences.
TTestResult paired_t(const PairedSample& sample);

// One-way ANOVA F for exactly two groups: between-group mean square over
// within-group mean square. Equals the squared unpaired equal-variance t.
double anova_f(std::span<const double> a, std::span<const double> b);

struct WilcoxonResult {
  double w_plus = 0.0;      // sum of ranks of positive differences
  double p_two_sided = 1.0;
  bool exact = false;       // exact distribution (n <= 25) vs normal approximation
  int n_used = 0;           // pairs left after dropping zero differences
};

// Two-sided Wilcoxon signed-rank test on b - a. Zero differences are dropped;
// tied absolute differences get averaged ranks. For n <= 25 the p-value is
// exact over the full sign-assignment distribution (computed by dynamic
// programming on doubled ranks, so ties stay exact); beyond that, a normal
// approximation with tie correction and continuity correction is used and
// flagged via exact = false. Throws ParamError if every difference is zero.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> diffs);
WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample);

}  // namespace mfl
