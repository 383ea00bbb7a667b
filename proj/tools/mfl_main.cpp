// Command-line entry point: instance generation, solving, exact
// verification, IP-model export, benchmarking, and statistics reports.
//
// Exit codes: 0 success, 2 usage/parameter error, 3 size-guard refusal,
// 4 I/O or file-format error, 1 unexpected failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "mfl/bench.hpp"
#include "mfl/errors.hpp"
#include "mfl/instance.hpp"
#include "mfl/local_search.hpp"
#include "mfl/oracle.hpp"
#include "mfl/run_record.hpp"
#include "mfl/solution.hpp"
#include "mfl/tabu_search.hpp"

namespace {

struct GenOptions {
  mfl::GenParams params;
  std::string out;
};

struct SolveOptions {
  std::string algo;
  std::string instance_file;
  std::uint64_t seed = 1;
  double budget_seconds = 0.0;
  std::uint64_t budget_iters = 0;
  bool no_diversify = false;
  std::string out_solution;
  std::string out_record;
};

struct ExactOptions {
  std::string instance_file;
  std::string out_solution;
};

struct ExportOptions {
  std::string instance_file;
  std::string out;
};

struct BenchOptions {
  std::string plan_file;
  std::string out;
  int threads_override = 0;
};

struct StatsOptions {
  std::string log_file;
  std::string fixture;
  std::string algo_a;
  std::string algo_b;
  std::string out;
};

void add_range_flags(CLI::App* cmd, mfl::GenParams& gp) {
  cmd->add_option("--revenue-min", gp.revenue_range.lo, "Store revenue lower bound");
  cmd->add_option("--revenue-max", gp.revenue_range.hi, "Store revenue upper bound");
  cmd->add_option("--transport-min", gp.transport_cost_range.lo, "Arc cost lower bound");
  cmd->add_option("--transport-max", gp.transport_cost_range.hi, "Arc cost upper bound");
  cmd->add_option("--fixed-store-min", gp.fixed_store_range.lo, "Store fixed cost lower bound");
  cmd->add_option("--fixed-store-max", gp.fixed_store_range.hi, "Store fixed cost upper bound");
  cmd->add_option("--fixed-plant-min", gp.fixed_plant_range.lo, "Plant fixed cost lower bound");
  cmd->add_option("--fixed-plant-max", gp.fixed_plant_range.hi, "Plant fixed cost upper bound");
  cmd->add_option("--fixed-warehouse-min", gp.fixed_warehouse_range.lo,
                  "Warehouse fixed cost lower bound");
  cmd->add_option("--fixed-warehouse-max", gp.fixed_warehouse_range.hi,
                  "Warehouse fixed cost upper bound");
  cmd->add_option("--fixed-dc-min", gp.fixed_dc_range.lo,
                  "Distribution-center fixed cost lower bound");
  cmd->add_option("--fixed-dc-max", gp.fixed_dc_range.hi,
                  "Distribution-center fixed cost upper bound");
}

int run_gen(const GenOptions& opt) {
  const mfl::Instance inst = mfl::generate(opt.params);
  mfl::save_instance(inst, opt.out);
  std::cout << "wrote " << opt.out << " (" << inst.name << ": bounds " << inst.bound_stores << "/"
            << inst.bound_plants << "/" << inst.bound_warehouses << "/" << inst.bound_dcs << ")\n";
  return 0;
}

void write_record_csv(const std::string& file, const mfl::RunRecord& rec) {
  std::ofstream out(file);
  if (!out) throw mfl::IoError("cannot open record file: " + file);
  mfl::write_run_log(out, {rec});
  if (!out) throw mfl::IoError("write to record file failed: " + file);
}

int run_solve(const SolveOptions& opt) {
  if (opt.algo != "ls" && opt.algo != "tabu")
    throw mfl::ParamError("--algo must be ls or tabu, got \"" + opt.algo + "\"");
  if (opt.algo == "tabu" && opt.no_diversify)
    throw mfl::ParamError("--no-diversify applies to --algo ls only");
  const mfl::Instance inst = mfl::load_instance(opt.instance_file);

  std::pair<mfl::Solution, mfl::RunRecord> out;
  if (opt.algo == "tabu") {
    mfl::TabuConfig cfg;
    cfg.seed = opt.seed;
    if (opt.budget_seconds > 0.0) cfg.time_budget_seconds = opt.budget_seconds;
    if (opt.budget_iters > 0) cfg.iter_budget = static_cast<std::int64_t>(opt.budget_iters);
    out = mfl::run_tabu(inst, cfg);
  } else {
    mfl::LsConfig cfg;
    cfg.seed = opt.seed;
    cfg.reseq = !opt.no_diversify;
    if (opt.budget_seconds > 0.0) cfg.time_budget_seconds = opt.budget_seconds;
    if (opt.budget_iters > 0)
      cfg.max_passes = static_cast<int>(
          std::min<std::uint64_t>(opt.budget_iters, std::numeric_limits<int>::max()));
    out = mfl::run_local_search(inst, cfg);
  }
  const mfl::RunRecord& rec = out.second;
  std::cout << "bfs=" << rec.bfs << " tb_seconds=" << rec.tb_seconds
            << " iterations=" << rec.iterations << " wall_seconds=" << rec.wall_seconds << "\n";
  if (!opt.out_solution.empty()) mfl::save_solution(out.first, opt.out_solution);
  if (!opt.out_record.empty()) write_record_csv(opt.out_record, rec);
  return 0;
}

int run_exact(const ExactOptions& opt) {
  const mfl::Instance inst = mfl::load_instance(opt.instance_file);
  const mfl::ExactResult result = mfl::exact_enumerate(inst);
  std::cout << result.objective << "\n";
  if (!opt.out_solution.empty()) mfl::save_solution(result.solution, opt.out_solution);
  return 0;
}

int run_export(const ExportOptions& opt) {
  const mfl::Instance inst = mfl::load_instance(opt.instance_file);
  mfl::export_path_ip(inst, std::filesystem::path(opt.out));
  std::cout << "wrote " << opt.out << "\n";
  return 0;
}

int run_bench(const BenchOptions& opt) {
  mfl::BenchPlan plan = mfl::load_plan(opt.plan_file);
  if (opt.threads_override > 0) plan.threads = opt.threads_override;
  const std::vector<mfl::RunRecord> records = mfl::run_plan(plan);
  mfl::append_run_log(opt.out, records);
  int failures = 0;
  for (const auto& rec : records)
    if (rec.status != "ok") ++failures;
  std::cout << "appended " << records.size() << " records to " << opt.out;
  if (failures > 0) std::cout << " (" << failures << " with errors)";
  std::cout << "\n";
  return 0;
}

int run_stats(const StatsOptions& opt) {
  if (opt.log_file.empty() == opt.fixture.empty())
    throw mfl::ParamError("exactly one of --log and --fixture is required");
  mfl::Report report;
  if (!opt.fixture.empty()) {
    if (opt.fixture == "table1") {
      report = mfl::report_from_fixture(mfl::fixture_table1());
    } else if (opt.fixture == "table2") {
      report = mfl::report_from_fixture(mfl::fixture_table2());
    } else {
      throw mfl::ParamError("--fixture must be table1 or table2, got \"" + opt.fixture + "\"");
    }
  } else {
    if (opt.algo_a.empty() || opt.algo_b.empty())
      throw mfl::ParamError("--log requires --algo-a and --algo-b");
    report = mfl::report_from_records(mfl::read_run_log(opt.log_file), opt.algo_a, opt.algo_b);
  }
  if (report.unpaired_dropped > 0)
    std::cerr << "warning: dropped " << report.unpaired_dropped
              << " records without a complete pair\n";
  if (opt.out.empty()) {
    mfl::write_report(std::cout, report);
  } else {
    std::ofstream out(opt.out);
    if (!out) throw mfl::IoError("cannot open report file: " + opt.out);
    mfl::write_report(out, report);
    if (!out) throw mfl::IoError("write to report file failed: " + opt.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-level facility location solver toolkit"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance file");
  gen->add_option("--m", gen_opt.params.m, "Number of stores")->required();
  gen->add_option("--n", gen_opt.params.n, "Number of plants")->required();
  gen->add_option("--k", gen_opt.params.k, "Number of warehouses")->required();
  gen->add_option("--j", gen_opt.params.j, "Number of distribution centers")->required();
  gen->add_option("--density", gen_opt.params.density,
                  "Independent presence probability per arc/eligibility entry");
  gen->add_option("--bound-fraction", gen_opt.params.bound_fraction,
                  "Each cardinality bound = ceil(fraction * set size)");
  gen->add_option("--seed", gen_opt.params.seed, "Generator seed");
  gen->add_option("--out", gen_opt.out, "Output instance file")->required();
  add_range_flags(gen, gen_opt.params);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance heuristically");
  solve->add_option("--algo", solve_opt.algo, "Algorithm: ls or tabu")->required();
  solve->add_option("--instance", solve_opt.instance_file, "Instance file")->required();
  solve->add_option("--seed", solve_opt.seed, "Run seed");
  solve->add_option("--budget-seconds", solve_opt.budget_seconds, "Wall-clock budget in seconds");
  solve->add_option("--budget-iters", solve_opt.budget_iters,
                    "Deterministic budget: passes for ls, accepted moves for tabu");
  solve->add_flag("--no-diversify", solve_opt.no_diversify,
                  "Freeze scan-order sequences at their initial draw (ls only)");
  solve->add_option("--out-solution", solve_opt.out_solution, "Write the best solution here");
  solve->add_option("--out-record", solve_opt.out_record, "Write a one-row run-record CSV here");

  ExactOptions exact_opt;
  CLI::App* exact = app.add_subcommand("exact", "Exact optimum by guarded enumeration");
  exact->add_option("--instance", exact_opt.instance_file, "Instance file")->required();
  exact->add_option("--out-solution", exact_opt.out_solution, "Write an optimal solution here");

  ExportOptions export_opt;
  CLI::App* exp = app.add_subcommand("export-ip", "Export the path-based IP model in LP format");
  exp->add_option("--instance", export_opt.instance_file, "Instance file")->required();
  exp->add_option("--out", export_opt.out, "Output .lp file")->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark plan and append a run log");
  bench->add_option("--plan", bench_opt.plan_file, "Plan JSON file")->required();
  bench->add_option("--out", bench_opt.out, "Run-log CSV to append to")->required();
  bench->add_option("--threads", bench_opt.threads_override,
                    "Override the plan's worker thread count");

  StatsOptions stats_opt;
  CLI::App* stats = app.add_subcommand("stats", "Statistics report from a run log or fixture");
  stats->add_option("--log", stats_opt.log_file, "Run-log CSV");
  stats->add_option("--fixture", stats_opt.fixture, "Embedded dataset: table1 or table2");
  stats->add_option("--algo-a", stats_opt.algo_a, "Baseline algorithm column (with --log)");
  stats->add_option("--algo-b", stats_opt.algo_b, "Comparison algorithm column (with --log)");
  stats->add_option("--out", stats_opt.out, "Report CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (solve->parsed()) return run_solve(solve_opt);
    if (exact->parsed()) return run_exact(exact_opt);
    if (exp->parsed()) return run_export(export_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (stats->parsed()) return run_stats(stats_opt);
  } catch (const mfl::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mfl::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mfl::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const mfl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
