#pragma once

// Exhaustive reference solver. Enumerates edge subsets by increasing size
// with direct definition checks (k-subset scans, BFS components, brute-force
// independence) and shares no search code with the main solver.

#include <cstdint>

#include "turan/solver.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// First feasible edge-subset size for the spec's family, with the first
// witness in enumeration order. Throws ResourceLimitError past the budget
// (counted in candidate subsets examined).
Certificate naive_oracle(const SolveSpec& spec, std::uint64_t subset_budget = kDefaultOracleBudget);

// Maximum edges of a K_k^(r)-free r-graph on n vertices, enumerating subsets
// by decreasing size. The other side of the duality identity.
std::int64_t naive_max_kfree(int n, int k, int r,
                             std::uint64_t subset_budget = kDefaultOracleBudget);

}
