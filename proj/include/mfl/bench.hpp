#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mfl/instance.hpp"
#include "mfl/run_record.hpp"

namespace mfl {

// One row of an embedded benchmark table: a named instance with the
// best-found objective (bfs) and time-to-best in seconds (tb) for two
// algorithms, called a and b throughout the reporting code.
struct FixtureRow {
    std::string instance_name;
    std::int64_t bfs_a = 0;
    std::int64_t bfs_b = 0;
    double tb_a = 0.0;
    double tb_b = 0.0;
};

// Embedded reference datasets, 50 rows each:
//   fixture_table1(): local search without (a) vs with (b) scan-order
//                     diversification.
//   fixture_table2(): local search (a) vs tabu search (b), both with
//                     scan-order diversification.
const std::vector<FixtureRow>& fixture_table1();
const std::vector<FixtureRow>& fixture_table2();

// One algorithm column of a benchmark plan. Unset budget fields (zero)
// fall back to the solver defaults.
struct AlgorithmSpec {
    std::string name;                  // ls_noseq | ls_seq | tabu_seq
    double budget_seconds = 0.0;       // wall-clock budget; 0 = unset
    std::uint64_t budget_iters = 0;    // accepted-move budget (tabu); 0 = unset
    int max_passes = 0;                // pass budget (local search); 0 = unset
    int max_starts = 0;                // restart budget (tabu); 0 = unset
};

// A benchmark plan: a set of instances (from files and/or generated on the
// fly), a set of algorithm columns, and a run matrix. Every
// (instance, algorithm, run) cell is executed with seed = seed_base + run.
struct BenchPlan {
    std::vector<std::string> instance_files;
    std::vector<GenParams> generated;
    std::vector<AlgorithmSpec> algorithms;
    int runs_per_instance = 15;
    std::uint64_t seed_base = 1;
    int threads = 1;
    std::string solutions_dir;  // when non-empty, best solutions are saved here
};

// Reads a plan from a JSON file. Throws IoError if the file cannot be read,
// ParseError on malformed content, ParamError on invalid values.
BenchPlan load_plan(const std::filesystem::path& file);

// Executes every cell of the plan and returns one record per cell in
// canonical (instance, algorithm, run) order, independent of thread count.
// Per-cell failures are recorded in the status field, never thrown; an
// instance that fails to load or generate yields one error record per cell.
// Every successful record's bfs is re-checked against a full re-evaluation
// of the best solution found.
std::vector<RunRecord> run_plan(const BenchPlan& plan);

// Run-log CSV with columns:
//   instance,algorithm,seed,bfs,tb_seconds,iterations,wall_seconds,status
// append_run_log creates the file (with header) when missing and appends
// otherwise; existing rows are never rewritten.
void write_run_log(std::ostream& out, const std::vector<RunRecord>& records);
void append_run_log(const std::filesystem::path& file,
                    const std::vector<RunRecord>& records);
std::vector<RunRecord> read_run_log(const std::filesystem::path& file);

// One statistics bundle for one (group, metric) cell of a report.
// Group is the instance size family (instance name with the leading
// corpus tag and trailing replicate index stripped); metric is "bfs" or
// "tb". Diffs are b - a per paired instance.
struct ReportRow {
    std::string group;
    std::string metric;       // "bfs" | "tb"
    int pairs = 0;            // paired instances in the group
    double mean_diff = 0.0;   // mean of (b - a)
    double stdev = 0.0;       // population stdev (divisor n) of the diffs
    double pct = 0.0;         // |mean_diff| / mean(a), as a fraction
    double t = 0.0;           // paired t statistic (divisor n - 1)
    double f = 0.0;           // one-way ANOVA F across the two columns
    double wilcoxon_p = 0.0;  // two-sided signed-rank p
    bool tests_valid = false; // t/f/wilcoxon computed (enough data, nonzero spread)
};

struct Report {
    std::vector<ReportRow> rows;
    int unpaired_dropped = 0;  // records excluded for lack of a partner
};

// Builds a report from raw run records for two algorithm columns. Records
// with a non-ok status are dropped. Per instance, runs are aggregated to a
// single (bfs, tb) point: bfs is the best objective over the runs and tb is
// the earliest time-to-best among runs attaining it. Instances present in
// only one column are dropped (counted in unpaired_dropped). Instances are
// then grouped by size family, in first-appearance order, and each group
// yields one row per metric.
Report report_from_records(const std::vector<RunRecord>& records,
                           const std::string& algo_a,
                           const std::string& algo_b);

// Same statistics computed directly from an embedded fixture table.
Report report_from_fixture(const std::vector<FixtureRow>& rows);

// Report CSV with columns:
//   group,metric,pairs,mean_diff,stdev,pct,t,F,wilcoxon_p
// Statistic cells of rows whose tests could not be computed are left empty.
void write_report(std::ostream& out, const Report& report);

}  // namespace mfl
