#include "mfl/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "mfl/errors.hpp"
#include "mfl/local_search.hpp"
#include "mfl/solution.hpp"
#include "mfl/stats.hpp"
#include "mfl/tabu_search.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mfl {

namespace {

bool known_algorithm(const std::string& name) {
  return name == "ls_noseq" || name == "ls_seq" || name == "tabu_seq";
}

void validate_plan(const BenchPlan& plan) {
  if (plan.instance_files.empty() && plan.generated.empty())
    throw ParamError("plan: no instances (need \"instances\" files or \"generate\" entries)");
  if (plan.algorithms.empty()) throw ParamError("plan: no algorithms");
  if (plan.runs_per_instance < 1) throw ParamError("plan: runs_per_instance must be >= 1");
  if (plan.threads < 1) throw ParamError("plan: threads must be >= 1");
  std::vector<std::string> seen;
  for (const auto& algo : plan.algorithms) {
    if (!known_algorithm(algo.name))
      throw ParamError("plan: unknown algorithm \"" + algo.name +
                       "\" (expected ls_noseq, ls_seq, or tabu_seq)");
    if (std::find(seen.begin(), seen.end(), algo.name) != seen.end())
      throw ParamError("plan: duplicate algorithm \"" + algo.name + "\"");
    seen.push_back(algo.name);
    if (algo.budget_seconds < 0.0) throw ParamError("plan: budget_seconds must be >= 0");
    if (algo.max_passes < 0) throw ParamError("plan: max_passes must be >= 0");
    if (algo.max_starts < 0) throw ParamError("plan: max_starts must be >= 0");
  }
}

IntRange range_from_json(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() ||
      !node[1].is_number_integer())
    throw ParseError("plan: " + field + " must be a [lo, hi] integer pair");
  return IntRange{node[0].get<std::int64_t>(), node[1].get<std::int64_t>()};
}

GenParams gen_params_from_json(const json& node) {
  if (!node.is_object()) throw ParseError("plan: generate entries must be objects");
  GenParams gp;
  try {
    gp.m = node.at("m").get<int>();
    gp.n = node.at("n").get<int>();
    gp.k = node.at("k").get<int>();
    gp.j = node.at("j").get<int>();
    if (node.contains("density")) gp.density = node["density"].get<double>();
    if (node.contains("bound_fraction")) gp.bound_fraction = node["bound_fraction"].get<double>();
    if (node.contains("seed")) gp.seed = node["seed"].get<std::uint64_t>();
    if (node.contains("revenue")) gp.revenue_range = range_from_json(node["revenue"], "revenue");
    if (node.contains("transport"))
      gp.transport_cost_range = range_from_json(node["transport"], "transport");
    if (node.contains("fixed_store"))
      gp.fixed_store_range = range_from_json(node["fixed_store"], "fixed_store");
    if (node.contains("fixed_plant"))
      gp.fixed_plant_range = range_from_json(node["fixed_plant"], "fixed_plant");
    if (node.contains("fixed_warehouse"))
      gp.fixed_warehouse_range = range_from_json(node["fixed_warehouse"], "fixed_warehouse");
    if (node.contains("fixed_dc")) gp.fixed_dc_range = range_from_json(node["fixed_dc"], "fixed_dc");
  } catch (const json::exception& e) {
    throw ParseError(std::string("plan: bad generate entry: ") + e.what());
  }
  return gp;
}

AlgorithmSpec algorithm_from_json(const json& node) {
  AlgorithmSpec spec;
  if (node.is_string()) {
    spec.name = node.get<std::string>();
    return spec;
  }
  if (!node.is_object()) throw ParseError("plan: algorithm entries must be strings or objects");
  try {
    spec.name = node.at("name").get<std::string>();
    if (node.contains("budget_seconds")) spec.budget_seconds = node["budget_seconds"].get<double>();
    if (node.contains("budget_iters")) spec.budget_iters = node["budget_iters"].get<std::uint64_t>();
    if (node.contains("max_passes")) spec.max_passes = node["max_passes"].get<int>();
    if (node.contains("max_starts")) spec.max_starts = node["max_starts"].get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("plan: bad algorithm entry: ") + e.what());
  }
  return spec;
}

// Error text travels in the last CSV column; keep it single-line and
// comma-free so rows stay parseable.
std::string sanitize_status(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  if (s.empty()) s = "error";
  return s;
}

std::string file_safe(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  if (out.empty()) out = "instance";
  return out;
}

// An instance slot of the run matrix; load/generate failures are kept so
// their cells can be logged as error rows instead of aborting the plan.
struct CellSource {
  std::string display_name;
  std::optional<Instance> inst;
  std::string error;
};

RunRecord run_cell(const BenchPlan& plan, const CellSource& src, const AlgorithmSpec& algo,
                   int run) {
  RunRecord rec;
  rec.instance_name = src.display_name;
  rec.algorithm = algo.name;
  rec.seed = plan.seed_base + static_cast<std::uint64_t>(run);
  if (!src.inst) {
    rec.status = sanitize_status(src.error);
    return rec;
  }
  const Instance& inst = *src.inst;
  try {
    std::pair<Solution, RunRecord> out;
    if (algo.name == "tabu_seq") {
      TabuConfig cfg;
      cfg.seed = rec.seed;
      if (algo.budget_seconds > 0.0) cfg.time_budget_seconds = algo.budget_seconds;
      if (algo.budget_iters > 0) cfg.iter_budget = static_cast<std::int64_t>(algo.budget_iters);
      if (algo.max_starts > 0) cfg.max_starts = algo.max_starts;
      out = run_tabu(inst, cfg);
    } else {
      LsConfig cfg;
      cfg.seed = rec.seed;
      cfg.reseq = (algo.name == "ls_seq");
      if (algo.budget_seconds > 0.0) cfg.time_budget_seconds = algo.budget_seconds;
      if (algo.max_passes > 0) {
        cfg.max_passes = algo.max_passes;
      } else if (algo.budget_iters > 0) {
        // For local search an iteration budget acts as a pass cap.
        cfg.max_passes = static_cast<int>(
            std::min<std::uint64_t>(algo.budget_iters, std::numeric_limits<int>::max()));
      }
      out = run_local_search(inst, cfg);
    }
    rec = out.second;
    if (evaluate(inst, out.first.assignment) != rec.bfs) {
      rec.status = "bfs re-evaluation mismatch";
      return rec;
    }
    if (!plan.solutions_dir.empty()) {
      const fs::path file = fs::path(plan.solutions_dir) /
                            (file_safe(rec.instance_name) + "__" + algo.name + "__s" +
                             std::to_string(rec.seed) + ".json");
      save_solution(out.first, file);
    }
  } catch (const std::exception& e) {
    rec.bfs = 0;
    rec.tb_seconds = 0.0;
    rec.iterations = 0;
    rec.wall_seconds = 0.0;
    rec.status = sanitize_status(e.what());
  }
  return rec;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

// "MFL-2000-30-50-150-7" -> "2000-30-50-150": instances of one size family
// differ only in the leading corpus tag and the trailing replicate index.
// Names not of that shape form their own group.
std::string size_group(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '-') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  const auto all_alpha = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isalpha(c) != 0;
    });
  };
  const auto all_digit = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  if (parts.size() < 3 || !all_alpha(parts.front()) || !all_digit(parts.back())) return name;
  std::string group = parts[1];
  for (std::size_t i = 2; i + 1 < parts.size(); ++i) group += "-" + parts[i];
  return group;
}

// One paired observation: per-instance (bfs, tb) of both algorithm columns.
struct PairPoint {
  std::string group;
  double bfs_a = 0.0;
  double bfs_b = 0.0;
  double tb_a = 0.0;
  double tb_b = 0.0;
};

Report build_report(const std::vector<PairPoint>& points, int unpaired_dropped) {
  Report rep;
  rep.unpaired_dropped = unpaired_dropped;
  std::vector<std::string> order;
  std::map<std::string, std::vector<const PairPoint*>> by_group;
  for (const auto& p : points) {
    auto [it, inserted] = by_group.try_emplace(p.group);
    if (inserted) order.push_back(p.group);
    it->second.push_back(&p);
  }
  for (const auto& group : order) {
    const auto& members = by_group[group];
    for (const char* metric : {"bfs", "tb"}) {
      PairedSample sample;
      const bool is_bfs = (metric[0] == 'b');
      for (const PairPoint* p : members) {
        sample.a.push_back(is_bfs ? p->bfs_a : p->tb_a);
        sample.b.push_back(is_bfs ? p->bfs_b : p->tb_b);
      }
      ReportRow row;
      row.group = group;
      row.metric = metric;
      row.pairs = static_cast<int>(members.size());
      const Descriptive desc = descriptive(sample);
      row.mean_diff = desc.mean_diff;
      row.stdev = desc.stdev_diff;
      row.pct = desc.pct_of_baseline;
      try {
        row.t = paired_t(sample).t;
        row.f = anova_f(sample.a, sample.b);
        row.wilcoxon_p = wilcoxon_signed_rank(sample).p_two_sided;
        row.tests_valid = true;
      } catch (const ParamError&) {
        // Too few pairs or degenerate spread: descriptive cells stand,
        // test cells stay empty.
        row.t = row.f = row.wilcoxon_p = 0.0;
        row.tests_valid = false;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace

BenchPlan load_plan(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open plan file: " + file.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("plan: invalid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ParseError("plan: top level must be an object");
  BenchPlan plan;
  try {
    if (doc.contains("instances"))
      for (const auto& node : doc["instances"]) plan.instance_files.push_back(node.get<std::string>());
    if (doc.contains("generate"))
      for (const auto& node : doc["generate"]) plan.generated.push_back(gen_params_from_json(node));
    if (doc.contains("algorithms"))
      for (const auto& node : doc["algorithms"]) plan.algorithms.push_back(algorithm_from_json(node));
    if (doc.contains("runs_per_instance")) plan.runs_per_instance = doc["runs_per_instance"].get<int>();
    if (doc.contains("seed_base")) plan.seed_base = doc["seed_base"].get<std::uint64_t>();
    if (doc.contains("threads")) plan.threads = doc["threads"].get<int>();
    if (doc.contains("solutions_dir")) plan.solutions_dir = doc["solutions_dir"].get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError("plan: " + std::string(e.what()));
  }
  validate_plan(plan);
  return plan;
}

std::vector<RunRecord> run_plan(const BenchPlan& plan) {
  validate_plan(plan);

  std::vector<CellSource> sources;
  for (const auto& file : plan.instance_files) {
    CellSource src;
    src.display_name = fs::path(file).stem().string();
    try {
      Instance inst = load_instance(file);
      src.display_name = inst.name;
      src.inst = std::move(inst);
    } catch (const std::exception& e) {
      src.error = e.what();
    }
    sources.push_back(std::move(src));
  }
  for (const auto& gp : plan.generated) {
    CellSource src;
    src.display_name = "generated";
    try {
      Instance inst = generate(gp);
      src.display_name = inst.name;
      src.inst = std::move(inst);
    } catch (const std::exception& e) {
      src.error = e.what();
    }
    sources.push_back(std::move(src));
  }

  if (!plan.solutions_dir.empty()) {
    std::error_code ec;
    fs::create_directories(plan.solutions_dir, ec);
    if (ec) throw IoError("cannot create solutions dir " + plan.solutions_dir + ": " + ec.message());
  }

  const std::size_t runs = static_cast<std::size_t>(plan.runs_per_instance);
  const std::size_t per_inst = plan.algorithms.size() * runs;
  const std::size_t cells = sources.size() * per_inst;
  std::vector<RunRecord> records(cells);
  std::atomic<std::size_t> next{0};

  // Cells are independent; workers pull indices from a shared counter and
  // write into their fixed slot, so the record order is canonical
  // (instance, algorithm, run) no matter how many threads run.
  const auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= cells) return;
      const CellSource& src = sources[c / per_inst];
      const AlgorithmSpec& algo = plan.algorithms[(c % per_inst) / runs];
      const int run = static_cast<int>(c % runs);
      records[c] = run_cell(plan, src, algo, run);
    }
  };
  if (plan.threads == 1 || cells <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int thread_count = std::min<std::size_t>(plan.threads, cells);
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

void write_run_log(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "instance,algorithm,seed,bfs,tb_seconds,iterations,wall_seconds,status\n";
  for (const auto& rec : records) {
    out << rec.instance_name << ',' << rec.algorithm << ',' << rec.seed << ',' << rec.bfs << ','
        << format_double(rec.tb_seconds) << ',' << rec.iterations << ','
        << format_double(rec.wall_seconds) << ',' << sanitize_status(rec.status) << '\n';
  }
}

void append_run_log(const fs::path& file, const std::vector<RunRecord>& records) {
  const bool fresh = !fs::exists(file) || fs::file_size(file) == 0;
  std::ofstream out(file, std::ios::app);
  if (!out) throw IoError("cannot open run log for append: " + file.string());
  if (fresh) out << "instance,algorithm,seed,bfs,tb_seconds,iterations,wall_seconds,status\n";
  for (const auto& rec : records) {
    out << rec.instance_name << ',' << rec.algorithm << ',' << rec.seed << ',' << rec.bfs << ','
        << format_double(rec.tb_seconds) << ',' << rec.iterations << ','
        << format_double(rec.wall_seconds) << ',' << sanitize_status(rec.status) << '\n';
  }
  if (!out) throw IoError("write to run log failed: " + file.string());
}

std::vector<RunRecord> read_run_log(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open run log: " + file.string());
  std::string line;
  if (!std::getline(in, line)) throw ParseError("run log " + file.string() + ": empty file");
  if (line != "instance,algorithm,seed,bfs,tb_seconds,iterations,wall_seconds,status")
    throw ParseError("run log " + file.string() + ": unexpected header \"" + line + "\"");
  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    // The status column is last and sanitized on write, so a plain comma
    // split is exact.
    while (cells.size() < 7) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) break;
      cells.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    cells.push_back(line.substr(start));
    if (cells.size() != 8)
      throw ParseError("run log " + file.string() + " line " + std::to_string(line_no) +
                       ": expected 8 columns");
    RunRecord rec;
    rec.instance_name = cells[0];
    rec.algorithm = cells[1];
    try {
      rec.seed = std::stoull(cells[2]);
      rec.bfs = std::stoll(cells[3]);
      rec.tb_seconds = std::stod(cells[4]);
      rec.iterations = std::stoll(cells[5]);
      rec.wall_seconds = std::stod(cells[6]);
    } catch (const std::exception&) {
      throw ParseError("run log " + file.string() + " line " + std::to_string(line_no) +
                       ": malformed numeric field");
    }
    rec.status = cells[7];
    records.push_back(std::move(rec));
  }
  return records;
}

Report report_from_records(const std::vector<RunRecord>& records, const std::string& algo_a,
                           const std::string& algo_b) {
  if (algo_a == algo_b) throw ParamError("report: the two algorithm columns must differ");

  // Aggregate each (instance, algorithm) run set to one point: the best
  // objective over the runs, and the earliest time-to-best among the runs
  // that attained it.
  struct Agg {
    std::int64_t bfs = std::numeric_limits<std::int64_t>::min();
    double tb = 0.0;
    int rows = 0;
  };
  std::vector<std::string> inst_order;
  std::map<std::string, std::array<Agg, 2>> by_instance;
  int dropped = 0;
  for (const auto& rec : records) {
    int col;
    if (rec.algorithm == algo_a) {
      col = 0;
    } else if (rec.algorithm == algo_b) {
      col = 1;
    } else {
      continue;  // other algorithms are simply not part of this report
    }
    // Error rows carry no usable measurement; they stay visible in the run
    // log itself and are not counted as unpaired drops.
    if (rec.status != "ok") continue;
    auto [it, inserted] = by_instance.try_emplace(rec.instance_name);
    if (inserted) inst_order.push_back(rec.instance_name);
    Agg& agg = it->second[static_cast<std::size_t>(col)];
    if (rec.bfs > agg.bfs || (rec.bfs == agg.bfs && rec.tb_seconds < agg.tb)) {
      agg.bfs = rec.bfs;
      agg.tb = rec.tb_seconds;
    }
    ++agg.rows;
  }

  std::vector<PairPoint> points;
  for (const auto& name : inst_order) {
    const auto& cols = by_instance[name];
    if (cols[0].rows == 0 || cols[1].rows == 0) {
      dropped += cols[0].rows + cols[1].rows;
      continue;
    }
    PairPoint p;
    p.group = size_group(name);
    p.bfs_a = static_cast<double>(cols[0].bfs);
    p.bfs_b = static_cast<double>(cols[1].bfs);
    p.tb_a = cols[0].tb;
    p.tb_b = cols[1].tb;
    points.push_back(std::move(p));
  }
  return build_report(points, dropped);
}

Report report_from_fixture(const std::vector<FixtureRow>& rows) {
  std::vector<PairPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows) {
    PairPoint p;
    p.group = size_group(row.instance_name);
    p.bfs_a = static_cast<double>(row.bfs_a);
    p.bfs_b = static_cast<double>(row.bfs_b);
    p.tb_a = row.tb_a;
    p.tb_b = row.tb_b;
    points.push_back(std::move(p));
  }
  return build_report(points, 0);
}

void write_report(std::ostream& out, const Report& report) {
  out << "group,metric,pairs,mean_diff,stdev,pct,t,F,wilcoxon_p\n";
  for (const auto& row : report.rows) {
    out << row.group << ',' << row.metric << ',' << row.pairs << ',' << format_double(row.mean_diff)
        << ',' << format_double(row.stdev) << ',' << format_double(row.pct) << ',';
    if (row.tests_valid) {
      out << format_double(row.t) << ',' << format_double(row.f) << ','
          << format_double(row.wilcoxon_p);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

}  // namespace mfl
