#pragma once

/// @file scheduler.hpp
/// @brief Opponent assignment for a fixed travel table.
///
/// The first half of the season is an exact cover: every (team, week) slot
/// holds one game, every pair of teams meets once, and a pair may meet only
/// in a week where their venues differ. The search branches on the open item
/// with the fewest options, either a slot (which opponent?) or a pair (which
/// week?), scanning slots week by week and team by team before pairs, so
/// ties resolve to the earliest week and lowest team id. The second half
/// copies the first; venues flip by themselves because every row is
/// mirror-complemented.
///
/// Before searching, every subset of teams is checked for room to play its
/// internal games (up to kMaxSubsetCheckTeams teams); most infeasible tables
/// fail there without any search.

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mttp/core.hpp"

namespace mttp {

/// Input matrix is not structurally usable (wrong shape, non-binary flags,
/// halves not complemented, or more than 64 teams).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;
inline constexpr int kMaxSubsetCheckTeams = 22;

enum class ScheduleStatus { Feasible, Infeasible };

struct SearchCertificate {
    /// Most first-half games placed at once during the search.
    int max_placed = 0;
    std::uint64_t nodes = 0;
    /// True when the search was abandoned rather than proven exhausted.
    bool budget_exhausted = false;
    /// Bit i set for team i: a team subset that cannot fit all of its
    /// internal games into weeks where its venues differ.
    std::optional<std::uint64_t> overfull_subset;
};

struct ScheduleOutcome {
    ScheduleStatus status = ScheduleStatus::Infeasible;
    std::optional<ScheduleMatrix> schedule;
    SearchCertificate certificate;

    [[nodiscard]] bool feasible() const noexcept { return status == ScheduleStatus::Feasible; }
};

/// Rows may repeat and weeks may be unbalanced; those simply come out
/// Infeasible. Throws PreconditionError for structural defects.
[[nodiscard]] ScheduleOutcome build_schedule(const TravelMatrix& travel,
                                             std::uint64_t node_budget = kDefaultNodeBudget);

/// build_schedule() behind a verdict cache keyed by the travel bits. Safe to
/// share between threads.
class Scheduler {
  public:
    explicit Scheduler(std::uint64_t node_budget = kDefaultNodeBudget) : budget_(node_budget) {}

    [[nodiscard]] ScheduleOutcome schedule(const TravelMatrix& travel);
    [[nodiscard]] bool is_schedulable(const TravelMatrix& travel) {
        return schedule(travel).feasible();
    }

    [[nodiscard]] std::uint64_t node_budget() const noexcept { return budget_; }
    [[nodiscard]] std::size_t cache_size() const;

  private:
    std::uint64_t budget_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, ScheduleOutcome> cache_;
};

/// Convenience wrapper with a default-budget process-local cache.
[[nodiscard]] bool is_schedulable(const TravelMatrix& travel);

} // namespace mttp
