#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <vector>

#include "json.hpp"
#include "mfl/delta.hpp"
#include "mfl/errors.hpp"
#include "mfl/instance.hpp"
#include "mfl/rng.hpp"
#include "mfl/solution.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace mfl;
namespace fs = std::filesystem;

namespace {

Assignment both_open() {
  return {Path{0, 0, 0}, Path{0, 0, 0}};
}

Assignment store0_only() {
  return {Path{0, 0, 0}, std::nullopt};
}

}  // namespace

TEST_CASE("evaluate on the two-store fixture") {
  const Instance inst = test::tiny_two_stores();
  // both open: revenue 180, store fixed 20, facilities 90, transport 3+4+5 + 3+4+6 = 25
  CHECK(evaluate(inst, both_open()) == 45);
  // store 0 alone cannot pay for the whole chain
  CHECK(evaluate(inst, store0_only()) == -12);
  CHECK(evaluate(inst, Assignment{std::nullopt, std::nullopt}) == 0);
}

TEST_CASE("evaluate rejects structurally broken paths") {
  const Instance inst = test::tiny_two_stores();
  SUBCASE("out-of-range plant index") {
    CHECK_THROWS_WITH_AS(evaluate(inst, {Path{3, 0, 0}, std::nullopt}),
                         doctest::Contains("out-of-range"), StructuralError);
  }
  SUBCASE("wrong assignment length") {
    CHECK_THROWS_WITH_AS(evaluate(inst, Assignment{std::nullopt}),
                         doctest::Contains("assignment length does not match store count"),
                         StructuralError);
  }
  SUBCASE("ineligible plant") {
    Instance restricted = inst;
    restricted.eligibility[0].clear();
    restricted.reindex();
    CHECK_THROWS_WITH_AS(evaluate(restricted, store0_only()),
                         doctest::Contains("cannot be served by plant"), StructuralError);
  }
  SUBCASE("missing transport arc") {
    Instance gap = inst;
    gap.wd_arcs.clear();
    gap.reindex();
    CHECK_THROWS_WITH_AS(evaluate(gap, store0_only()),
                         doctest::Contains("missing arc: store 0 wd (0, 0)"), StructuralError);
  }
}

TEST_CASE("check_feasibility reports violations instead of throwing") {
  Instance inst = test::tiny_two_stores();
  CHECK(check_feasibility(inst, both_open()).feasible());

  SUBCASE("store cardinality bound") {
    inst.bound_stores = 1;
    const auto rep = check_feasibility(inst, both_open());
    CHECK_FALSE(rep.feasible());
    CHECK(std::any_of(rep.violations.begin(), rep.violations.end(), [](const std::string& v) {
      return v.find("store bound: 2 > 1") != std::string::npos;
    }));
  }
  SUBCASE("structural problem is a violation, not an exception") {
    Instance gap = inst;
    gap.ds_arcs.erase(gap.ds_arcs.begin());  // drop dc0 -> store0
    gap.reindex();
    const auto rep = check_feasibility(gap, both_open());
    CHECK_FALSE(rep.feasible());
    CHECK(std::any_of(rep.violations.begin(), rep.violations.end(), [](const std::string& v) {
      return v.find("missing arc: store 0 ds (0, 0)") != std::string::npos;
    }));
  }
  SUBCASE("length mismatch") {
    const auto rep = check_feasibility(inst, Assignment{std::nullopt});
    CHECK_FALSE(rep.feasible());
  }
}

TEST_CASE("recount_usage counts open stores per facility") {
  const Instance inst = test::tiny_two_stores();
  SUBCASE("both stores share the single chain") {
    const UsageCounts u = recount_usage(inst, both_open());
    CHECK(u.plant == std::vector<int>{2});
    CHECK(u.warehouse == std::vector<int>{2});
    CHECK(u.dc == std::vector<int>{2});
  }
  SUBCASE("empty assignment uses nothing") {
    const UsageCounts u = recount_usage(inst, Assignment{std::nullopt, std::nullopt});
    CHECK(u.plant == std::vector<int>{0});
    CHECK(u.warehouse == std::vector<int>{0});
    CHECK(u.dc == std::vector<int>{0});
  }
  SUBCASE("single open store") {
    const UsageCounts u = recount_usage(inst, store0_only());
    CHECK(u.plant == std::vector<int>{1});
    CHECK(u.warehouse == std::vector<int>{1});
    CHECK(u.dc == std::vector<int>{1});
  }
}

TEST_CASE("make_solution fills every cache consistently") {
  const Instance inst = test::tiny_second_dc();  // dc 1 serves store 0 only
  const Solution sol = make_solution(inst, {Path{0, 0, 1}, Path{0, 0, 0}});
  CHECK(sol.objective == evaluate(inst, sol.assignment));
  CHECK(sol.open_stores == 2);
  CHECK(sol.used_plants == 1);
  CHECK(sol.used_warehouses == 1);
  CHECK(sol.used_dcs == 2);
  const UsageCounts u = recount_usage(inst, sol.assignment);
  CHECK(sol.usage_plant == u.plant);
  CHECK(sol.usage_warehouse == u.warehouse);
  CHECK(sol.usage_dc == u.dc);

  const Solution empty = empty_solution(inst);
  CHECK(empty.objective == 0);
  CHECK(empty.open_stores == 0);
  CHECK(empty.assignment == Assignment{std::nullopt, std::nullopt});
}

TEST_CASE("solution save/load round trip") {
  const Instance inst = test::tiny_two_stores();
  const fs::path file = fs::temp_directory_path() / "mfl-test-solution.json";
  const Solution sol = make_solution(inst, both_open());
  save_solution(sol, file);

  SUBCASE("round trip is identity") {
    CHECK(load_solution(inst, file) == sol);
  }
  SUBCASE("stale objective in the file is caught") {
    auto j = nlohmann::json::parse(std::ifstream(file));
    j["objective"] = 9999;
    std::ofstream(file) << j.dump(2);
    CHECK_THROWS_WITH_AS(load_solution(inst, file),
                         doctest::Contains("objective self-check failed"), ParseError);
  }
  SUBCASE("missing assignment field") {
    std::ofstream(file) << "{\"objective\": 0}";
    CHECK_THROWS_WITH_AS(load_solution(inst, file),
                         doctest::Contains("missing field: assignment"), ParseError);
  }
  SUBCASE("path that does not fit the instance") {
    std::ofstream(file) << "{\"assignment\": [[0,0,1], null], \"objective\": 0}";
    CHECK_THROWS_WITH_AS(load_solution(inst, file),
                         doctest::Contains("solution does not fit instance"), ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_solution(inst, fs::temp_directory_path() / "mfl-test-nope.json"), IoError);
  }
  fs::remove(file);
}

TEST_CASE("caches stay exact under long random move sequences") {
  GenParams gp;
  gp.m = 30;
  gp.n = 4;
  gp.k = 5;
  gp.j = 6;
  gp.density = 0.5;
  gp.bound_fraction = 0.5;  // loose bounds keep the proposal acceptance rate high
  gp.seed = 2024;
  const Instance inst = generate(gp);
  Rng rng(77);
  Solution sol = empty_solution(inst);

  std::int64_t applied = 0;
  const std::int64_t target = 100000;
  std::int64_t proposals = 0;
  int audits = 0;
  while (applied < target) {
    REQUIRE(++proposals < 500 * target);  // safety net against a stalled walk
    const int store = static_cast<int>(rand_int(rng, 0, inst.num_stores - 1));
    DeltaResult dr;
    switch (rand_int(rng, 0, 4)) {
      case 0: dr = delta_close_store(inst, sol, store); break;
      case 1: {
        const Path p{static_cast<int>(rand_int(rng, 0, inst.num_plants - 1)),
                     static_cast<int>(rand_int(rng, 0, inst.num_warehouses - 1)),
                     static_cast<int>(rand_int(rng, 0, inst.num_dcs - 1))};
        dr = delta_open_store(inst, sol, store, p);
        break;
      }
      case 2: dr = delta_swap_dc(inst, sol, store, static_cast<int>(rand_int(rng, 0, inst.num_dcs - 1))); break;
      case 3:
        dr = delta_swap_warehouse(inst, sol, store,
                                  static_cast<int>(rand_int(rng, 0, inst.num_warehouses - 1)));
        break;
      default:
        dr = delta_swap_plant(inst, sol, store, static_cast<int>(rand_int(rng, 0, inst.num_plants - 1)));
        break;
    }
    if (!dr.ok()) continue;
    apply_move(inst, sol, *dr.move);
    ++applied;

    if (applied % 5000 == 0) {
      ++audits;
      REQUIRE(sol.objective == evaluate(inst, sol.assignment));
      const UsageCounts u = recount_usage(inst, sol.assignment);
      REQUIRE(sol.usage_plant == u.plant);
      REQUIRE(sol.usage_warehouse == u.warehouse);
      REQUIRE(sol.usage_dc == u.dc);
      REQUIRE(check_feasibility(inst, sol.assignment).feasible());
      int opens = 0;
      for (int m = 0; m < inst.num_stores; ++m) opens += sol.is_open(m) ? 1 : 0;
      REQUIRE(sol.open_stores == opens);
    }
  }
  CHECK(applied == target);
  CHECK(audits == 20);
}
