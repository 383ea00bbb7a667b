#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mfl/bench.hpp"
#include "mfl/errors.hpp"
#include "mfl/rng.hpp"
#include "mfl/stats.hpp"
#include "support/reference.hpp"

using namespace mfl;

namespace {

// Paired columns of one size group of the published measurements.
PairedSample fixture_group(const std::vector<FixtureRow>& rows, const std::string& infix, bool bfs) {
  PairedSample s;
  for (const FixtureRow& r : rows) {
    if (r.instance_name.find(infix) == std::string::npos) continue;
    s.a.push_back(bfs ? static_cast<double>(r.bfs_a) : r.tb_a);
    s.b.push_back(bfs ? static_cast<double>(r.bfs_b) : r.tb_b);
  }
  return s;
}

// Builds n diffs alternating m+a / m-a (n even), or with a trailing exact m
// (n odd): mean m, sample stdev derived from a, so the paired t statistic is
// controlled exactly.
std::vector<double> controlled_diffs(int n, double m, double a) {
  std::vector<double> d;
  for (int i = 0; i < n - (n % 2); ++i) d.push_back(i % 2 == 0 ? m + a : m - a);
  if (n % 2 == 1) d.push_back(m);
  return d;
}

PairedSample diffs_as_sample(const std::vector<double>& diffs) {
  PairedSample s;
  s.a.assign(diffs.size(), 0.0);
  s.b = diffs;
  return s;
}

}  // namespace

TEST_CASE("descriptive statistics reproduce the published 2000-store group") {
  const auto rows = fixture_table1();
  const PairedSample bfs = fixture_group(rows, "-2000-", true);
  REQUIRE(bfs.a.size() == 10);

  const Descriptive d = descriptive(bfs);
  CHECK(d.mean_diff == doctest::Approx(453.0).epsilon(1e-12));
  CHECK(d.stdev_diff == doctest::Approx(208.1226).epsilon(1e-6));
  // published as 0.73 percent of the baseline mean
  CHECK(d.pct_of_baseline * 100.0 == doctest::Approx(0.73).epsilon(0.01));

  const PairedSample tb = fixture_group(rows, "-2000-", false);
  const Descriptive dt = descriptive(tb);
  CHECK(dt.mean_diff == doctest::Approx(-2502.4805).epsilon(1e-8));
  CHECK(dt.stdev_diff == doctest::Approx(943.4303).epsilon(1e-6));
}

TEST_CASE("descriptive rejects degenerate inputs") {
  CHECK_THROWS_AS(descriptive(PairedSample{{}, {}}), ParamError);
  CHECK_THROWS_AS(descriptive(PairedSample{{1.0, 2.0}, {1.0}}), ParamError);
  // a zero baseline mean degrades the relative column to 0 instead of
  // killing the whole report; the absolute cells stay meaningful
  const Descriptive zb = descriptive(PairedSample{{-1.0, 1.0}, {2.0, 3.0}});
  CHECK(zb.mean_diff == doctest::Approx(2.5));
  CHECK(zb.pct_of_baseline == 0.0);
  // identical series: zero mean difference and zero spread are fine here
  const Descriptive d = descriptive(PairedSample{{5.0, 5.0}, {5.0, 5.0}});
  CHECK(d.mean_diff == 0.0);
  CHECK(d.stdev_diff == 0.0);
  CHECK(d.pct_of_baseline == 0.0);
}

TEST_CASE("paired t on the published 2000-store group") {
  const PairedSample bfs = fixture_group(fixture_table1(), "-2000-", true);
  const TTestResult r = paired_t(bfs);
  CHECK(r.df == 9);
  CHECK(r.t == doctest::Approx(6.5298).epsilon(1e-4));
  CHECK(r.p_two_sided < 0.001);
}

TEST_CASE("paired t basics") {
  SUBCASE("symmetric differences give t of zero and p of one") {
    const TTestResult r = paired_t(diffs_as_sample({1.0, -1.0}));
    CHECK(r.t == doctest::Approx(0.0));
    CHECK(r.p_two_sided == doctest::Approx(1.0));
    CHECK(r.df == 1);
  }
  SUBCASE("shift invariance: adding a constant to both series changes nothing") {
    PairedSample s;
    s.a = {10.0, 20.0, 30.0, 40.0};
    s.b = {12.0, 19.0, 33.0, 45.0};
    PairedSample shifted = s;
    for (double& x : shifted.a) x += 1000.0;
    for (double& x : shifted.b) x += 1000.0;
    const TTestResult r1 = paired_t(s);
    const TTestResult r2 = paired_t(shifted);
    CHECK(r1.t == doctest::Approx(r2.t).epsilon(1e-12));
    CHECK(r1.p_two_sided == doctest::Approx(r2.p_two_sided).epsilon(1e-12));
  }
  SUBCASE("degenerate inputs") {
    CHECK_THROWS_AS(paired_t(diffs_as_sample({1.0})), ParamError);
    CHECK_THROWS_AS(paired_t(diffs_as_sample({0.0, 0.0, 0.0})), ParamError);
    CHECK_THROWS_AS(paired_t(diffs_as_sample({2.0, 2.0, 2.0})), ParamError);
    CHECK_THROWS_AS(paired_t(PairedSample{{1.0, 2.0}, {1.0}}), ParamError);
  }
}

TEST_CASE("paired t p-values match an independent implementation of the t distribution") {
  // Two-sided p-values for controlled t statistics, frozen from an
  // independent statistics library. The samples are constructed so the t
  // statistic hits the probe point exactly.
  struct Probe {
    int n;
    double m;
    double a;
    double expected_t;
    double expected_p;
  };
  // alternating construction: even n gives t = m * sqrt(n) / a; odd n gives
  // sample variance (n-1) a^2 / ... -- values below were chosen per case
  const std::vector<Probe> probes = {
      // n=10 even: s = a * sqrt(10/9), t = m * 3 / a
      {10, 6.52974, 3.0, 6.52974, 1.0766785880563805e-4},
      // n=6 even: s = a * sqrt(6/5), t = m * sqrt(5) / a
      {6, 2.0, std::sqrt(5.0), 2.0, 0.10193947882985828},
      // n=2 even: s = a * sqrt(2), t = m / a
      {2, 0.5, 1.0, 0.5, 0.7048327646991336},
      // n=21 odd: twenty alternating pairs plus the mean, s = a, t = m * sqrt(21) / a
      {21, -1.3, std::sqrt(21.0), -1.3, 0.20838449551338692},
      // n=3 odd: s = a, t = m * sqrt(3) / a
      {3, 3.1623, std::sqrt(3.0), 3.1623, 0.08712799600856443},
  };
  for (const Probe& p : probes) {
    CAPTURE(p.n);
    const TTestResult r = paired_t(diffs_as_sample(controlled_diffs(p.n, p.m, p.a)));
    CHECK(r.df == p.n - 1);
    CHECK(r.t == doctest::Approx(p.expected_t).epsilon(1e-9));
    CHECK(r.p_two_sided == doctest::Approx(p.expected_p).epsilon(1e-9));
  }
}

TEST_CASE("anova F on the published 2000-store group") {
  const PairedSample bfs = fixture_group(fixture_table1(), "-2000-", true);
  CHECK(anova_f(bfs.a, bfs.b) == doctest::Approx(2.7960).epsilon(1e-4));
}

TEST_CASE("anova F closed form and identities") {
  SUBCASE("identical groups have F of zero") {
    const std::vector<double> g = {1.0, 2.0, 3.0};
    CHECK(anova_f(g, g) == doctest::Approx(0.0));
  }
  SUBCASE("a constant shift c between copies of [0,0,1] gives F = 4.5 c^2") {
    for (const double c : {0.5, 1.0, 2.0, 3.0}) {
      const std::vector<double> a = {0.0, 0.0, 1.0};
      const std::vector<double> b = {c, c, 1.0 + c};
      CHECK(anova_f(a, b) == doctest::Approx(4.5 * c * c).epsilon(1e-12));
    }
  }
  SUBCASE("two-group F equals the squared unpaired t everywhere") {
    Rng rng(404);
    for (int round = 0; round < 50; ++round) {
      std::vector<double> a, b;
      const int na = 2 + static_cast<int>(rand_int(rng, 0, 8));
      const int nb = 2 + static_cast<int>(rand_int(rng, 0, 8));
      for (int i = 0; i < na; ++i) a.push_back(static_cast<double>(rand_int(rng, -50, 50)) / 7.0);
      for (int i = 0; i < nb; ++i) b.push_back(static_cast<double>(rand_int(rng, -50, 50)) / 7.0);
      const double t = test::unpaired_t(a, b);
      if (!std::isfinite(t)) continue;  // zero pooled variance draw
      const double f = anova_f(a, b);
      REQUIRE(f == doctest::Approx(t * t).epsilon(1e-9));
    }
  }
  SUBCASE("degenerate inputs") {
    const std::vector<double> one = {1.0};
    const std::vector<double> two = {1.0, 2.0};
    const std::vector<double> flat = {3.0, 3.0};
    CHECK_THROWS_AS(anova_f(one, two), ParamError);
    CHECK_THROWS_AS(anova_f(flat, flat), ParamError);
  }
}

TEST_CASE("wilcoxon exact p-values") {
  SUBCASE("ten all-positive differences") {
    std::vector<double> d;
    for (int i = 1; i <= 10; ++i) d.push_back(static_cast<double>(i));
    const WilcoxonResult r = wilcoxon_signed_rank(d);
    CHECK(r.exact);
    CHECK(r.n_used == 10);
    CHECK(r.w_plus == 55.0);
    CHECK(r.p_two_sided == 0.001953125);  // 2 / 2^10, exactly
  }
  SUBCASE("ten all-negative differences mirror exactly") {
    std::vector<double> d;
    for (int i = 1; i <= 10; ++i) d.push_back(-static_cast<double>(i));
    const WilcoxonResult r = wilcoxon_signed_rank(d);
    CHECK(r.w_plus == 0.0);
    CHECK(r.p_two_sided == 0.001953125);
  }
  SUBCASE("perfectly balanced tie gives p of one") {
    const WilcoxonResult r = wilcoxon_signed_rank(std::vector<double>{5.0, -5.0});
    CHECK(r.exact);
    CHECK(r.w_plus == 1.5);  // averaged rank of the tie
    CHECK(r.p_two_sided == 1.0);
  }
  SUBCASE("three positive differences") {
    const WilcoxonResult r = wilcoxon_signed_rank(std::vector<double>{1.0, 2.0, 3.0});
    CHECK(r.p_two_sided == 0.25);  // 2 / 2^3
  }
  SUBCASE("zero differences are dropped before ranking") {
    const WilcoxonResult r = wilcoxon_signed_rank(std::vector<double>{0.0, 1.0, 0.0, 2.0, 3.0});
    CHECK(r.n_used == 3);
    CHECK(r.p_two_sided == 0.25);
  }
  SUBCASE("all-zero differences are refused") {
    CHECK_THROWS_AS(wilcoxon_signed_rank(std::vector<double>{0.0, 0.0}), ParamError);
  }
}

TEST_CASE("wilcoxon on the published 3000-store completion-time group") {
  const PairedSample tb = fixture_group(fixture_table1(), "-3000-", false);
  REQUIRE(tb.a.size() == 10);
  const WilcoxonResult r = wilcoxon_signed_rank(tb);
  CHECK(r.exact);
  CHECK(r.p_two_sided == 0.00390625);
}

TEST_CASE("wilcoxon is invariant under positive monotone rescaling") {
  Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    std::vector<double> d;
    const int n = 5 + static_cast<int>(rand_int(rng, 0, 15));
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(rand_int(rng, -20, 20));
      if (x == 0.0) x = 21.0;
      d.push_back(x);
    }
    std::vector<double> scaled = d;
    for (double& x : scaled) x *= 3.7;
    const WilcoxonResult r1 = wilcoxon_signed_rank(d);
    const WilcoxonResult r2 = wilcoxon_signed_rank(scaled);
    REQUIRE(r1.w_plus == r2.w_plus);
    REQUIRE(r1.p_two_sided == r2.p_two_sided);
    REQUIRE(r1.n_used == r2.n_used);
  }
}

TEST_CASE("wilcoxon switches to the normal approximation past 25 pairs") {
  std::vector<double> d;
  for (int i = 1; i <= 30; ++i) d.push_back(static_cast<double>(i));
  const WilcoxonResult all_pos = wilcoxon_signed_rank(d);
  CHECK_FALSE(all_pos.exact);
  CHECK(all_pos.n_used == 30);
  CHECK(all_pos.w_plus == 465.0);
  CHECK(all_pos.p_two_sided > 0.0);
  CHECK(all_pos.p_two_sided < 1e-5);

  d[0] = -1.0;  // one dissent weakens the evidence
  const WilcoxonResult one_neg = wilcoxon_signed_rank(d);
  CHECK(one_neg.p_two_sided >= all_pos.p_two_sided);
  CHECK(one_neg.p_two_sided < 1e-4);

  SUBCASE("ties keep the approximation finite") {
    std::vector<double> tied(30, 2.0);
    for (int i = 0; i < 10; ++i) tied[static_cast<std::size_t>(i)] = -2.0;
    const WilcoxonResult r = wilcoxon_signed_rank(tied);
    CHECK_FALSE(r.exact);
    CHECK(std::isfinite(r.p_two_sided));
    CHECK(r.p_two_sided > 0.05);  // 20 vs 10 on equal magnitudes is weak evidence
  }
}

TEST_CASE("exact and approximate wilcoxon agree near the crossover") {
  // At n = 25 the exact DP still runs; the same data fed as 26 values with a
  // zero appended drops back to n_used 25 and must give the identical exact
  // p. And a 26-pair sample forced through both sides stays close.
  std::vector<double> d;
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    double x = static_cast<double>(rand_int(rng, -30, 30));
    if (x == 0.0) x = 31.0;
    d.push_back(x);
  }
  const WilcoxonResult exact25 = wilcoxon_signed_rank(d);
  CHECK(exact25.exact);

  std::vector<double> with_zero = d;
  with_zero.push_back(0.0);
  const WilcoxonResult dropped = wilcoxon_signed_rank(with_zero);
  CHECK(dropped.exact);
  CHECK(dropped.n_used == 25);
  CHECK(dropped.p_two_sided == exact25.p_two_sided);
}

TEST_CASE("streaming moments match the two-pass formulas") {
  Rng rng(123);
  std::vector<double> xs;
  test::Welford w;
  for (int i = 0; i < 1000; ++i) {
    const double x = static_cast<double>(rand_int(rng, -1000000, 1000000)) / 997.0;
    xs.push_back(x);
    w.add(x);
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double pop_sd = std::sqrt(ss / static_cast<double>(xs.size()));
  CHECK(w.count() == 1000);
  CHECK(w.mean() == doctest::Approx(mean).epsilon(1e-12));
  CHECK(w.population_stdev() == doctest::Approx(pop_sd).epsilon(1e-12));
}
