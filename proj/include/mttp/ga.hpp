#pragma once

/// @file ga.hpp
/// @brief Genetic algorithm over travel tables.
///
/// A genome is a complement-paired travel table. Mutation flips one week of
/// one team, its mirrored week, and the same two weeks of the complement
/// partner. Crossover takes n/2 rows from two parents, weighted towards the
/// parent with fewer trips, and completes them with their complements. The
/// generational loop keeps the elite, refills the population with children
/// of elite parents and only runs the (expensive) scheduler on individuals
/// that become the best in the population.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mttp/core.hpp"
#include "mttp/rng.hpp"
#include "mttp/scheduler.hpp"

namespace mttp {

/// Fitness of an individual proven to have no schedule.
inline constexpr int kBannedFitness = std::numeric_limits<int>::max();

struct GAParams {
    int population = 4;
    int elite = 2;
    double mutation_prob = 0.8;
    int max_iterations = 5000;
    std::optional<int> target;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

enum class Schedulable { Unknown, Yes, No };

struct Individual {
    TravelMatrix travel;
    /// partner[t] is the row holding the complement of row t.
    std::vector<int> partner;
    int fitness = kBannedFitness;
    Schedulable schedulable = Schedulable::Unknown;
    std::optional<ScheduleMatrix> schedule;
};

/// Wraps a freshly built matrix with canonical partners and its fitness.
[[nodiscard]] Individual make_individual(InstanceSize size, TravelMatrix travel);

/// Sets fitness to the total trip count; schedulability stays Unknown.
[[nodiscard]] Individual evaluate(Individual ind);

struct MutationStats {
    std::uint64_t calls = 0;
    std::uint64_t resamples = 0;
    std::uint64_t fallbacks = 0;
};

inline constexpr int kMutationAttempts = 100;

/// Flips (team, week), (team, week + n - 1) and the same cells of the
/// partner row. week must be in the first half. No validity check.
[[nodiscard]] Individual mutate_at(const Individual& ind, int team, int week);

/// Random (team, first-half week) flip, resampled until the table stays
/// valid; returns the input unchanged after kMutationAttempts failures.
[[nodiscard]] Individual mutate(const Individual& ind, Rng& rng, MutationStats* stats = nullptr);

/// Rows contributed by parent a when crossing parents with fitness fa, fb.
[[nodiscard]] int crossover_share(int pairs, int fa, int fb);

/// Throws std::invalid_argument when the parents differ in size.
[[nodiscard]] Individual crossover(const Individual& a, const Individual& b, Rng& rng);

enum class EvolveStatus { Solved, NoFeasibleSolution };

struct EvolveResult {
    EvolveStatus status = EvolveStatus::NoFeasibleSolution;
    /// Best schedulable individual; with NoFeasibleSolution, the best
    /// candidate seen, unscheduled.
    Individual best;
    /// Best schedulable fitness after initialization and after each
    /// iteration (kBannedFitness while none is known).
    std::vector<int> history;
    int iterations = 0;
    MutationStats mutation;
    std::uint64_t schedule_checks = 0;
};

/// Runs the GA. The scheduler's cache may be shared between runs.
[[nodiscard]] EvolveResult evolve(InstanceSize size, const GAParams& params, Scheduler& scheduler);

[[nodiscard]] EvolveResult evolve(InstanceSize size, const GAParams& params);

} // namespace mttp
