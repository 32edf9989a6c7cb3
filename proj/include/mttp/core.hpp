#pragma once

/// @file core.hpp
/// @brief Domain types, trip-counting objective and validators for the
/// mirrored traveling tournament problem (mTTP).
///
/// Teams and weeks are 0-based throughout the library. The file format and
/// all human-readable text (violation details, CLI output) use 1-based ids.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mttp {

/// Thrown when a sequence or grid has the wrong dimensions for its instance.
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Number of teams of a tournament. Always even and at least 4.
class InstanceSize {
  public:
    explicit InstanceSize(int teams);

    [[nodiscard]] int teams() const noexcept { return teams_; }
    /// Rounds in the whole double round robin (2n-2).
    [[nodiscard]] int weeks() const noexcept { return 2 * teams_ - 2; }
    /// Rounds per half (n-1).
    [[nodiscard]] int half() const noexcept { return teams_ - 1; }

    friend bool operator==(InstanceSize, InstanceSize) = default;

  private:
    int teams_;
};

/// Venue flag of one team in one week.
enum Venue : std::uint8_t { kHome = 0, kAway = 1 };

/// A team's home(0)/away(1) flags over all weeks.
using TravelSequence = std::vector<std::uint8_t>;

/// One travel sequence per team ("table A"). Not validated on construction;
/// use validate_travel().
struct TravelMatrix {
    std::vector<TravelSequence> rows;

    [[nodiscard]] int teams() const noexcept { return static_cast<int>(rows.size()); }
    [[nodiscard]] int weeks() const noexcept {
        return rows.empty() ? 0 : static_cast<int>(rows.front().size());
    }
    [[nodiscard]] std::uint8_t at(int team, int week) const { return rows.at(team).at(week); }

    friend bool operator==(const TravelMatrix&, const TravelMatrix&) = default;
};

/// Opponent of every team in every week ("table B"), 0-based team ids.
struct ScheduleMatrix {
    std::vector<std::vector<int>> rows;

    [[nodiscard]] int teams() const noexcept { return static_cast<int>(rows.size()); }
    [[nodiscard]] int at(int team, int week) const { return rows.at(team).at(week); }

    friend bool operator==(const ScheduleMatrix&, const ScheduleMatrix&) = default;
};

struct Tournament {
    InstanceSize size;
    TravelMatrix travel;
    ScheduleMatrix schedule;
};

enum class ViolationKind {
    RunLength,
    MirrorComplement,
    ColumnBalance,
    DuplicateRow,
    SelfPlay,
    SymmetryBroken,
    NotRoundRobin,
    NotMirrored,
    VenueInconsistent,
    BadShape,
};

[[nodiscard]] std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
    ViolationKind kind;
    std::optional<int> team;
    std::optional<int> week;
    std::string detail;
};

/// Longest allowed stretch of consecutive home or consecutive away games.
inline constexpr int kMaxRun = 3;

/// Trips made by one team over a season: the walk starts at home, visits the
/// venue of every week in order and returns home. Consecutive away games are
/// against distinct opponents, so each away week is reached by one trip, and
/// every away run ends with one trip home. Hence aways + away runs.
[[nodiscard]] int count_trips_team(std::span<const std::uint8_t> seq);

/// Same as above, but throws ShapeError unless seq has size.weeks() entries.
[[nodiscard]] int count_trips_team(std::span<const std::uint8_t> seq, InstanceSize size);

[[nodiscard]] int count_trips_total(const TravelMatrix& travel);

/// Largest minus smallest per-team trip count. Zero for an empty matrix.
[[nodiscard]] int fairness_spread(const TravelMatrix& travel);

/// Longest run of equal consecutive values in seq.
[[nodiscard]] int longest_run(std::span<const std::uint8_t> seq);

/// True iff the second half of seq is the bitwise complement of the first.
[[nodiscard]] bool is_mirror_complement(std::span<const std::uint8_t> seq);

/// Index of the row equal to the complement of `team`'s row, if any.
[[nodiscard]] std::optional<int> complement_partner(const TravelMatrix& travel, int team);

/// Reports every breach of the travel-matrix invariants: shape, run length,
/// mirrored halves, weekly balance, distinct rows and complement pairing.
/// Returns an empty list iff the matrix is a valid mTTP travel table.
[[nodiscard]] std::vector<Violation> validate_travel(const TravelMatrix& travel, InstanceSize size);

/// validate_travel() plus every schedule invariant: no self play, symmetric
/// pairings, one round robin per half, mirrored halves and home/away
/// consistency between the two tables.
[[nodiscard]] std::vector<Violation> validate_tournament(const Tournament& t);

/// Human-readable single line for a violation, 1-based team and week ids.
[[nodiscard]] std::string describe(const Violation& v);

} // namespace mttp
