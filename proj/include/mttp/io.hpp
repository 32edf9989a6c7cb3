#pragma once

/// @file io.hpp
/// @brief Tournament files.
///
/// A tournament file is a JSON object:
///
///     {
///       "n": 4,
///       "travel": [[0, 0, 0, 1, 1, 1], ...],
///       "schedule": [[2, 3, 4, 2, 3, 4], ...]
///     }
///
/// `travel` holds n rows of 2n-2 venue flags (0 home, 1 away). `schedule` is
/// optional and holds 1-based opponent ids. Parsing only checks types; wrong
/// row counts or lengths are left for the validators to report.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mttp/core.hpp"

namespace mttp {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TournamentFile {
    InstanceSize size;
    TravelMatrix travel;
    std::optional<ScheduleMatrix> schedule;
};

[[nodiscard]] TournamentFile parse_tournament(std::string_view text);
[[nodiscard]] TournamentFile read_tournament(const std::filesystem::path& path);

/// One row per line, stable byte-for-byte for equal inputs.
[[nodiscard]] std::string format_tournament(InstanceSize size, const TravelMatrix& travel,
                                            const std::optional<ScheduleMatrix>& schedule);
[[nodiscard]] inline std::string format_tournament(const Tournament& t) {
    return format_tournament(t.size, t.travel, t.schedule);
}

void write_text(const std::filesystem::path& path, std::string_view text);

/// Violations of a parsed file: tournament checks when a schedule is
/// present, travel checks otherwise.
[[nodiscard]] std::vector<Violation> validate_file(const TournamentFile& file);

} // namespace mttp
