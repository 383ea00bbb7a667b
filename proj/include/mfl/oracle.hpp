#pragma once

#include <cstdint>
#include <filesystem>

#include "mfl/solution.hpp"

namespace mfl {

struct ExactResult {
  std::int64_t objective = 0;
  Solution solution;
};

// Exact optimum by enumeration over facility subsets within the cardinality
// bounds. For each (plant set, warehouse set, dc set): every store's cheapest
// feasible path over those facilities gives its profit (revenue - store fixed
// cost - transport); the best store selection opens the top bound_stores
// stores with positive profit (ties to the lower index), and fixed costs are
// charged only for facilities the selected paths actually use. Also
// deterministic in its tie-breaks (first optimum in canonical subset order).
// Refuses instances beyond 6 plants, 6 warehouses, 6 dcs, or 12 stores with
// GuardError — the cost is exponential in those sizes.
ExactResult exact_enumerate(const Instance& inst);

std::size_t count_feasible_paths(const Instance& inst);

// Writes a path-formulation 0/1 integer program in LP format: one binary
// variable x_{n}_{k}_{j}_{m} per feasible path with objective coefficient
// revenue - the three leg costs; binary indicators p{n}, w{k}, d{j}, s{m}
// carrying the (negated) fixed costs; linking rows path <= each indicator;
// at-most-one-path-per-store rows; and the four cardinality rows. An external
// IP solver's optimum on this file equals exact_enumerate's objective.
// Refuses instances with more than 1,000,000 feasible paths (GuardError).
void export_path_ip(const Instance& inst, std::ostream& out);
void export_path_ip(const Instance& inst, const std::filesystem::path& file);

}  // namespace mfl
