#include "mttp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mttp/bounds.hpp"
#include "mttp/io.hpp"
#include "mttp/oracle.hpp"

namespace mttp::cli {

namespace {

bool non_increasing(const std::vector<int>& history) {
    return std::adjacent_find(history.begin(), history.end(),
                              [](int a, int b) { return b > a; }) == history.end();
}

std::string history_text(const std::vector<int>& history) {
    std::ostringstream os;
    os << "iteration,best\n";
    for (std::size_t i = 0; i < history.size(); ++i) {
        os << i << ",";
        if (history[i] != kBannedFitness) os << history[i];
        os << "\n";
    }
    return os.str();
}

} // namespace

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
    std::optional<InstanceSize> size;
    try {
        size.emplace(opts.teams);
        opts.params.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const auto result = evolve(*size, opts.params);
    if (opts.verbose) {
        const auto& m = result.mutation;
        err << "mutation calls " << m.calls << " resamples " << m.resamples << " fallbacks " << m.fallbacks
            << " fallback_rate " << (m.calls ? static_cast<double>(m.fallbacks) / static_cast<double>(m.calls) : 0.0)
            << " schedule_checks " << result.schedule_checks << "\n";
    }
    if (opts.history) {
        try {
            write_text(*opts.history, history_text(result.history));
        } catch (const IoError& e) {
            err << "error: " << e.what() << "\n";
            return kIo;
        }
    }
    if (result.status != EvolveStatus::Solved) {
        err << "no schedulable travel table found in " << result.iterations
            << " iterations; best unscheduled candidate has " << result.best.fitness << " trips\n";
        return kFailed;
    }

    const auto& best = result.best;
    try {
        write_text(opts.out, format_tournament(*size, best.travel, best.schedule));
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }

    const auto ref = reference_row(opts.teams);
    out << "teams " << opts.teams << " trips " << best.fitness << " fairness_spread "
        << fairness_spread(best.travel) << " iterations " << result.iterations;
    if (ref) {
        out << " published_lb " << ref->lower_bound << " lb_met " << (best.fitness <= ref->lower_bound ? "yes" : "no");
    } else {
        out << " naive_lb " << naive_lower_bound(*size);
    }
    out << "\n";
    return kOk;
}

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    std::optional<TournamentFile> file;
    try {
        file = read_tournament(path);
    } catch (const ParseError& e) {
        err << path.string() << ": parse error: " << e.what() << "\n";
        return kIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    const auto violations = validate_file(*file);
    for (const auto& v : violations) out << describe(v) << "\n";
    if (!violations.empty()) {
        out << violations.size() << " violation(s)\n";
        return kFailed;
    }
    out << "ok: " << file->size.teams() << " teams, " << count_trips_total(file->travel) << " trips"
        << (file->schedule ? "" : " (travel table only)") << "\n";
    return kOk;
}

namespace {

struct Cell {
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<EvolveResult> result;
    std::string error;
    std::vector<std::string> findings;
};

void run_cell(Cell& cell, const BenchOptions& opts) {
    const InstanceSize size(cell.n);
    GAParams params = opts.params;
    params.seed = cell.seed;
    const auto ref = reference_row(cell.n);
    if (opts.stop_at_bound) params.target = ref ? ref->lower_bound : naive_lower_bound(size);
    try {
        cell.result = evolve(size, params);
    } catch (const std::exception& e) {
        cell.error = e.what();
        return;
    }
    const auto& r = *cell.result;
    auto finding = [&](const std::string& what) { cell.findings.push_back(what); };
    if (!non_increasing(r.history)) finding("best-fitness history increases");
    if (r.status != EvolveStatus::Solved) return;
    if (r.best.fitness < naive_lower_bound(size)) finding("best below the naive lower bound");
    if (ref && r.best.fitness < ref->lower_bound) finding("best below the published lower bound");
    if (!r.best.schedule || !validate_tournament({size, r.best.travel, *r.best.schedule}).empty()) {
        finding("best tournament fails validation");
    }
}

} // namespace

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.teams.empty() || opts.seeds.empty()) {
        err << "error: bench needs at least one team count and one seed\n";
        return kUsage;
    }
    try {
        for (int n : opts.teams) (void)InstanceSize(n);
        opts.params.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::vector<Cell> cells;
    for (int n : opts.teams) {
        for (auto s : opts.seeds) cells.push_back({n, s, std::nullopt, {}, {}});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i], opts);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int status = kOk;
    std::ostringstream csv;
    csv << kBenchHeader << "\n";
    std::ostringstream detail;
    detail << "n,seed,status,best,iterations_run,fairness_spread,schedule_checks\n";

    std::size_t c = 0;
    for (int n : opts.teams) {
        const Individual* best = nullptr;
        for (std::size_t k = 0; k < opts.seeds.size(); ++k, ++c) {
            const auto& cell = cells[c];
            for (const auto& f : cell.findings) {
                err << "finding: n=" << n << " seed=" << cell.seed << ": " << f << "\n";
                status = kFailed;
            }
            detail << n << "," << cell.seed << ",";
            if (!cell.result) {
                err << "n=" << n << " seed=" << cell.seed << ": " << cell.error << "\n";
                detail << "error,,,,\n";
                status = kFailed;
                continue;
            }
            const auto& r = *cell.result;
            const bool solved = r.status == EvolveStatus::Solved;
            detail << (solved ? "solved" : "infeasible") << ",";
            if (solved) detail << r.best.fitness;
            detail << "," << r.iterations << ",";
            if (solved) detail << fairness_spread(r.best.travel);
            detail << "," << r.schedule_checks << "\n";
            if (solved && (!best || r.best.fitness < best->fitness)) best = &r.best;
        }

        const auto ref = reference_row(n);
        csv << n << ",";
        if (best) {
            csv << best->fitness;
        } else {
            csv << "NA";
            err << "n=" << n << ": no seed produced a schedulable tournament\n";
            status = kFailed;
        }
        csv << ",";
        if (ref) csv << ref->obtained << "," << ref->lower_bound << "," << ref->known;
        else csv << ",,";
        csv << ",";
        if (ref && best) csv << best->fitness - ref->lower_bound << "," << best->fitness - ref->known;
        else csv << ",";
        csv << "," << opts.seeds.size() << "," << opts.params.max_iterations << ",";
        if (best) csv << fairness_spread(best->travel);
        csv << "\n";
    }

    try {
        write_text(opts.out_csv, csv.str());
        if (opts.per_seed_csv) write_text(*opts.per_seed_csv, detail.str());
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    out << csv.str();
    return status;
}

int cmd_oracle(int teams, const std::optional<std::filesystem::path>& out_path, std::ostream& out,
               std::ostream& err) {
    if (teams != 4 && teams != 6) {
        err << "error: the exhaustive oracle supports 4 or 6 teams, got " << teams << "\n";
        return kUsage;
    }
    const auto result = exhaustive_min_trips(InstanceSize(teams));
    if (out_path) {
        try {
            write_text(*out_path, format_tournament(result.witness));
        } catch (const IoError& e) {
            err << "error: " << e.what() << "\n";
            return kIo;
        }
    }
    out << "teams " << teams << " min_trips " << result.min_trips << " optimal_sets "
        << result.optimal_sets << " max_optimal_fairness_spread " << result.max_optimal_spread
        << "\n";
    return kOk;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size() || s.empty() || s.front() == '-') {
            throw std::invalid_argument("bad seed '" + s + "'");
        }
        return static_cast<std::uint64_t>(v);
    };
    if (text.find(',') == std::string::npos) {
        const auto count = number(text);
        for (std::uint64_t s = 1; s <= count; ++s) seeds.push_back(s);
        return seeds;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) seeds.push_back(number(item));
    }
    return seeds;
}

namespace {

void add_ga_flags(CLI::App& cmd, GAParams& params) {
    cmd.add_option("--iterations", params.max_iterations, "Iteration budget")->check(CLI::NonNegativeNumber);
    cmd.add_option("--mutation-prob", params.mutation_prob, "Mutation probability per child")
        ->check(CLI::Range(0.0, 1.0));
    cmd.add_option("--population", params.population, "Population size");
    cmd.add_option("--elite", params.elite, "Individuals kept each iteration");
    cmd.add_option("--node-budget", params.node_budget, "Scheduler search-node budget");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mirrored traveling tournament solver (minimum total trips)", "mttp"};
    app.require_subcommand(1);

    SolveOptions solve;
    if (const char* env = std::getenv("MTTP_SEED")) {
        try {
            solve.params.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "warning: ignoring malformed MTTP_SEED\n";
        }
    }
    std::string solve_out = "tournament.json";
    std::string solve_history;
    auto* solve_cmd = app.add_subcommand("solve", "Run the genetic algorithm for one team count");
    solve_cmd->add_option("--teams", solve.teams, "Number of teams (even, >= 4)")->required();
    solve_cmd->add_option("--seed", solve.params.seed, "Random seed (default $MTTP_SEED or 1)");
    solve_cmd->add_option("--target", solve.params.target, "Stop once a schedulable table has at most this many trips");
    add_ga_flags(*solve_cmd, solve.params);
    solve_cmd->add_option("--out", solve_out, "Tournament file to write");
    solve_cmd->add_option("--history", solve_history, "CSV of the best fitness per iteration");
    solve_cmd->add_flag("-v,--verbose", solve.verbose, "Print mutation and scheduler counters to stderr");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a tournament file");
    validate_cmd->add_option("path", validate_path, "Tournament file")->required();

    BenchOptions bench;
    std::string bench_teams = "4,6,8";
    std::string bench_seeds = "5";
    std::string bench_out = "bench.csv";
    std::string bench_detail;
    bool no_target = false;
    auto* bench_cmd = app.add_subcommand("bench", "Compare best-found trips with published results");
    bench_cmd->add_option("--teams", bench_teams, "Comma-separated team counts");
    bench_cmd->add_option("--seeds", bench_seeds, "Seed count (1..N) or comma-separated list");
    add_ga_flags(*bench_cmd, bench.params);
    bench_cmd->add_flag("--no-target", no_target, "Always run the full iteration budget");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads");
    bench_cmd->add_option("--out", bench_out, "CSV report");
    bench_cmd->add_option("--per-seed", bench_detail, "Optional per-seed CSV");

    int oracle_teams = 4;
    std::string oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum for 4 or 6 teams");
    oracle_cmd->add_option("--teams", oracle_teams, "4 or 6")->required();
    oracle_cmd->add_option("--out", oracle_out, "Witness tournament file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) {
            solve.out = solve_out;
            if (!solve_history.empty()) solve.history = solve_history;
            return cmd_solve(solve, out, err);
        }
        if (*validate_cmd) return cmd_validate(validate_path, out, err);
        if (*bench_cmd) {
            std::stringstream ss(bench_teams);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) bench.teams.push_back(std::stoi(item));
            }
            bench.seeds = parse_seeds(bench_seeds);
            bench.stop_at_bound = !no_target;
            bench.out_csv = bench_out;
            if (!bench_detail.empty()) bench.per_seed_csv = bench_detail;
            return cmd_bench(bench, out, err);
        }
        if (*oracle_cmd) {
            std::optional<std::filesystem::path> path;
            if (!oracle_out.empty()) path = oracle_out;
            return cmd_oracle(oracle_teams, path, out, err);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace mttp::cli
