#pragma once

/// @file cli.hpp
/// @brief Commands behind the `mttp` executable. Each returns a process exit
/// code: 0 success, 1 violations or no feasible solution, 2 usage, 3 I/O.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mttp/ga.hpp"

namespace mttp::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct SolveOptions {
    int teams = 0;
    GAParams params;
    std::filesystem::path out;
    std::optional<std::filesystem::path> history;
    /// Operator and scheduler counters on err.
    bool verbose = false;
};

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<int> teams;
    std::vector<std::uint64_t> seeds;
    GAParams params;
    /// Stop a run early once it meets the published lower bound.
    bool stop_at_bound = true;
    unsigned jobs = 1;
    std::filesystem::path out_csv;
    std::optional<std::filesystem::path> per_seed_csv;
};

inline constexpr const char* kBenchHeader =
    "n,best_found,paper_or,paper_lb,paper_kr,gap_vs_lb,gap_vs_kr,seeds,iterations,fairness_spread";

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

int cmd_oracle(int teams, const std::optional<std::filesystem::path>& out_path, std::ostream& out,
               std::ostream& err);

/// "20" means seeds 1..20; "3,8,11" (any comma) is an explicit list.
[[nodiscard]] std::vector<std::uint64_t> parse_seeds(const std::string& text);

/// Parses argv and dispatches. MTTP_SEED supplies the default seed for
/// `solve`; --seed wins.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mttp::cli
