#pragma once

/// @file oracle.hpp
/// @brief Brute-force ground truth for 4 and 6 teams. Shares nothing with
/// the scheduler or the GA beyond the core types and the trip count.

#include "mttp/core.hpp"

namespace mttp {

struct OracleResult {
    int min_trips = 0;
    Tournament witness{InstanceSize(4), {}, {}};
    /// Number of optimal, schedulable complement-paired row sets.
    int optimal_sets = 0;
    /// Largest fairness_spread over all optimal row sets.
    int max_optimal_spread = 0;
};

/// Minimum total trips over every valid complement-paired travel table that
/// admits a mirrored schedule. Throws std::invalid_argument unless n is 4 or 6.
[[nodiscard]] OracleResult exhaustive_min_trips(InstanceSize size);

/// Tries every combination of per-week home/away bijections over the first
/// half and reports whether one meets each pair exactly once. Requires a
/// shape-correct table with 4 or 6 rows, otherwise throws std::invalid_argument.
[[nodiscard]] bool exhaustive_schedulability(const TravelMatrix& travel);

} // namespace mttp
