#pragma once

#include <cstdint>
#include <string>

namespace mfl {

// One solver run's outcome, as logged by the benchmark harness.
//   bfs          best objective found
//   tb_seconds   wall-clock time at which that objective was first reached
//   iterations   accepted (applied) moves over the whole run
//   wall_seconds total run time; tb_seconds <= wall_seconds
struct RunRecord {
  std::string instance_name;
  std::string algorithm;  // ls_noseq | ls_seq | tabu_seq
  std::uint64_t seed = 0;
  std::int64_t bfs = 0;
  double tb_seconds = 0.0;
  std::int64_t iterations = 0;
  double wall_seconds = 0.0;
  std::string status = "ok";
};

}  // namespace mfl
