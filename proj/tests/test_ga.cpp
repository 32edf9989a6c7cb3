#include <gtest/gtest.h>

#include <algorithm>

#include "mttp/bounds.hpp"
#include "mttp/ga.hpp"
#include "mttp/patterns.hpp"
#include "test_support.hpp"

using namespace mttp;

namespace {

Individual six_team_individual() { return make_individual(InstanceSize(6), mttp::testing::six_team_travel()); }

} // namespace

TEST(GAParams, Validation) {
    GAParams p;
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.population, 4);
    EXPECT_EQ(p.elite, 2);
    EXPECT_DOUBLE_EQ(p.mutation_prob, 0.8);
    p.elite = 4;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.population = 1;
    p.elite = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.mutation_prob = 1.5;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Evaluate, Fitness) {
    EXPECT_EQ(make_individual(InstanceSize(4), mttp::testing::four_team_travel()).fitness, 17);
    Individual zeros;
    zeros.travel.rows.assign(4, TravelSequence(6, 0));
    EXPECT_EQ(evaluate(zeros).fitness, 0);
    EXPECT_FALSE(validate_travel(zeros.travel, InstanceSize(4)).empty());

    Rng rng(6);
    for (int k = 0; k < 200; ++k) {
        const auto ind = make_individual(InstanceSize(6), build_individual(InstanceSize(6), rng));
        ASSERT_GE(ind.fitness, naive_lower_bound(InstanceSize(6)));
        ASSERT_GE(ind.fitness, 42);
        ASSERT_EQ(ind.schedulable, Schedulable::Unknown);
    }
}

TEST(Mutate, FirstTeamFirstWeek) {
    const auto before = six_team_individual();
    const auto after = mutate_at(before, 0, 0);
    const auto& a = after.travel.rows;
    EXPECT_EQ(a[0][0], 1);
    EXPECT_EQ(a[0][5], 0);
    EXPECT_EQ(a[3][0], 0);
    EXPECT_EQ(a[3][5], 1);
    int changed = 0;
    for (int t = 0; t < 6; ++t) {
        for (int w = 0; w < 10; ++w) changed += a[t][w] != before.travel.rows[t][w];
    }
    EXPECT_EQ(changed, 4);
    const auto vs = validate_travel(after.travel, InstanceSize(6));
    EXPECT_TRUE(std::none_of(vs.begin(), vs.end(),
                             [](const Violation& v) { return v.kind == ViolationKind::ColumnBalance; }));
    // team 4 now repeats team 6, so the random operator must reject this flip
    EXPECT_EQ(a[3], a[5]);
    EXPECT_EQ(after.fitness, count_trips_total(after.travel));
}

TEST(Mutate, SameFlipTwiceRestores) {
    const auto ind = six_team_individual();
    for (int t = 0; t < 6; ++t) {
        for (int w = 0; w < 5; ++w) EXPECT_EQ(mutate_at(mutate_at(ind, t, w), t, w).travel, ind.travel);
    }
}

TEST(Mutate, FuzzKeepsTablesValid) {
    MutationStats stats;
    for (int n : {4, 6, 8, 12}) {
        const InstanceSize size(n);
        Rng rng(500 + static_cast<std::uint64_t>(n));
        auto ind = make_individual(size, build_individual(size, rng));
        for (int k = 0; k < 1000; ++k) {
            ind = mutate(ind, rng, &stats);
            const auto vs = validate_travel(ind.travel, size);
            ASSERT_TRUE(vs.empty()) << describe(vs.front());
            ASSERT_EQ(ind.fitness, count_trips_total(ind.travel));
        }
    }
    EXPECT_EQ(stats.calls, 4000u);
    EXPECT_GT(stats.resamples, 0u);
}

TEST(Crossover, Share) {
    // equal parents: n/4 rounded
    EXPECT_EQ(crossover_share(3, 50, 50), 2);
    EXPECT_EQ(crossover_share(5, 130, 130), 3);
    EXPECT_EQ(crossover_share(4, 80, 80), 2);
    // the fitter parent gives more rows, but both always give one
    EXPECT_EQ(crossover_share(10, 100, 1000), 9);
    EXPECT_EQ(crossover_share(10, 1000, 100), 1);
    EXPECT_EQ(crossover_share(2, 17, 20), 1);
    EXPECT_EQ(crossover_share(5, kBannedFitness, 130), 1);
}

TEST(Crossover, ChildStructure) {
    Rng rng(8);
    const InstanceSize size(6);
    const auto a = make_individual(size, build_individual(size, rng));
    const auto b = make_individual(size, build_individual(size, rng));
    for (int k = 0; k < 200; ++k) {
        const auto child = crossover(a, b, rng);
        ASSERT_TRUE(validate_travel(child.travel, size).empty());
        for (int t = 0; t < 3; ++t) {
            const auto& row = child.travel.rows[t];
            ASSERT_EQ(child.travel.rows[t + 3], swap_complement(row));
            ASSERT_EQ(child.partner[t], t + 3);
        }
    }
}

TEST(Crossover, SameParentTwice) {
    Rng rng(21);
    const InstanceSize size(8);
    const auto a = make_individual(size, build_individual(size, rng));
    for (int k = 0; k < 100; ++k) {
        const auto child = crossover(a, a, rng);
        ASSERT_TRUE(validate_travel(child.travel, size).empty());
        for (const auto& row : child.travel.rows) {
            ASSERT_NE(std::find(a.travel.rows.begin(), a.travel.rows.end(), row), a.travel.rows.end());
        }
    }
}

TEST(Crossover, SizeMismatchThrows) {
    Rng rng(1);
    const auto a = make_individual(InstanceSize(4), build_individual(InstanceSize(4), rng));
    const auto b = make_individual(InstanceSize(6), build_individual(InstanceSize(6), rng));
    EXPECT_THROW((void)crossover(a, b, rng), std::invalid_argument);
}

TEST(Evolve, HistoryAndResult) {
    for (int n : {4, 6, 8, 10}) {
        GAParams p;
        p.seed = 3;
        p.max_iterations = 300;
        const auto r = evolve(InstanceSize(n), p);
        ASSERT_EQ(r.status, EvolveStatus::Solved);
        ASSERT_EQ(r.history.size(), static_cast<std::size_t>(r.iterations) + 1);
        ASSERT_TRUE(std::is_sorted(r.history.rbegin(), r.history.rend()));
        ASSERT_EQ(r.history.back(), r.best.fitness);
        ASSERT_EQ(r.best.schedulable, Schedulable::Yes);
        ASSERT_TRUE(r.best.schedule.has_value());
        const auto vs = validate_tournament({InstanceSize(n), r.best.travel, *r.best.schedule});
        ASSERT_TRUE(vs.empty()) << describe(vs.front());
        ASSERT_GE(r.best.fitness, naive_lower_bound(InstanceSize(n)));
    }
}

TEST(Evolve, DeterministicPerSeed) {
    GAParams p;
    p.seed = 42;
    p.max_iterations = 500;
    const auto a = evolve(InstanceSize(8), p);
    const auto b = evolve(InstanceSize(8), p);
    EXPECT_EQ(a.history, b.history);
    EXPECT_EQ(a.best.travel, b.best.travel);
    EXPECT_EQ(a.best.schedule, b.best.schedule);
}

TEST(Evolve, StopsAtTarget) {
    GAParams p;
    p.seed = 2;
    p.target = 17;
    const auto r = evolve(InstanceSize(4), p);
    EXPECT_EQ(r.best.fitness, 17);
    EXPECT_LT(r.iterations, p.max_iterations);
}

TEST(Evolve, ReachesSmallOptima) {
    int hits4 = 0;
    int hits6 = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GAParams p;
        p.seed = seed;
        p.max_iterations = 1000;
        hits4 += evolve(InstanceSize(4), p).best.fitness == 17;
        hits6 += evolve(InstanceSize(6), p).best.fitness == 48;
    }
    EXPECT_GE(hits4, 10);
    EXPECT_GE(hits6, 8);
}

TEST(Evolve, LargerPopulation) {
    GAParams p;
    p.population = 10;
    p.elite = 3;
    p.mutation_prob = 1.0;
    p.max_iterations = 200;
    const auto r = evolve(InstanceSize(10), p);
    EXPECT_EQ(r.status, EvolveStatus::Solved);
    EXPECT_TRUE(std::is_sorted(r.history.rbegin(), r.history.rend()));
}
