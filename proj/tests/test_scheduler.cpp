#include <gtest/gtest.h>

#include "mttp/oracle.hpp"
#include "mttp/patterns.hpp"
#include "mttp/scheduler.hpp"
#include "test_support.hpp"

using namespace mttp;

namespace {

void expect_sound(const TravelMatrix& travel, const ScheduleOutcome& out) {
    ASSERT_TRUE(out.feasible());
    ASSERT_TRUE(out.schedule.has_value());
    const Tournament t{InstanceSize(travel.teams()), travel, *out.schedule};
    const auto vs = validate_tournament(t);
    ASSERT_TRUE(vs.empty()) << describe(vs.front());
    const int half = travel.teams() - 1;
    for (const auto& row : out.schedule->rows) {
        for (int w = 0; w < half; ++w) ASSERT_EQ(row[w], row[w + half]);
    }
}

// All 4-row tables whose rows are mirror-complemented, valid or not.
std::vector<TravelMatrix> all_mirrored_four_team_tables() {
    std::vector<TravelSequence> rows;
    for (unsigned bits = 0; bits < 8; ++bits) {
        TravelSequence s(6);
        for (int w = 0; w < 3; ++w) {
            s[w] = static_cast<std::uint8_t>((bits >> w) & 1u);
            s[w + 3] = static_cast<std::uint8_t>(1 - s[w]);
        }
        rows.push_back(s);
    }
    std::vector<TravelMatrix> out;
    for (const auto& a : rows)
        for (const auto& b : rows)
            for (const auto& c : rows)
                for (const auto& d : rows) out.push_back({{a, b, c, d}});
    return out;
}

} // namespace

TEST(BuildSchedule, KnownTable) {
    const auto travel = mttp::testing::four_team_travel();
    expect_sound(travel, build_schedule(travel));
}

TEST(BuildSchedule, DuplicateRowsAreInfeasible) {
    const TravelMatrix m{{{0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0}}};
    const auto out = build_schedule(m);
    EXPECT_EQ(out.status, ScheduleStatus::Infeasible);
    EXPECT_FALSE(out.certificate.budget_exhausted);
    EXPECT_FALSE(exhaustive_schedulability(m));
    EXPECT_FALSE(Scheduler().is_schedulable(m));
}

TEST(BuildSchedule, StructuralDefectsThrow) {
    auto m = mttp::testing::four_team_travel();
    m.rows[0][5] = 0;
    EXPECT_THROW((void)build_schedule(m), PreconditionError);
    m = mttp::testing::four_team_travel();
    m.rows.pop_back();
    EXPECT_THROW((void)build_schedule(m), PreconditionError);
    m = mttp::testing::four_team_travel();
    m.rows[1].push_back(0);
    EXPECT_THROW((void)build_schedule(m), PreconditionError);
}

TEST(BuildSchedule, AgreesWithEnumerationOnEveryMirroredFourTeamTable) {
    int feasible = 0;
    int infeasible = 0;
    for (const auto& m : all_mirrored_four_team_tables()) {
        const auto out = build_schedule(m);
        ASSERT_FALSE(out.certificate.budget_exhausted);
        ASSERT_EQ(out.feasible(), exhaustive_schedulability(m));
        if (out.feasible()) {
            ++feasible;
            Tournament t{InstanceSize(4), m, *out.schedule};
            // schedule invariants hold even when the travel table itself
            // breaks run or pairing rules
            for (const auto& v : validate_tournament(t)) {
                ASSERT_TRUE(v.kind == ViolationKind::RunLength || v.kind == ViolationKind::MirrorComplement ||
                            v.kind == ViolationKind::DuplicateRow)
                    << describe(v);
            }
        } else {
            ++infeasible;
        }
    }
    EXPECT_GT(feasible, 0);
    EXPECT_GT(infeasible, 0);
}

TEST(BuildSchedule, SoundOnBuiltIndividuals) {
    for (int n : {4, 6, 8}) {
        const InstanceSize size(n);
        Rng rng(40 + static_cast<std::uint64_t>(n));
        for (int k = 0; k < 300; ++k) {
            const auto m = build_individual(size, rng);
            const auto out = build_schedule(m);
            ASSERT_FALSE(out.certificate.budget_exhausted);
            if (out.feasible()) expect_sound(m, out);
            if (n == 6) ASSERT_EQ(out.feasible(), exhaustive_schedulability(m));
        }
    }
}

TEST(BuildSchedule, LargerInstancesStaySound) {
    for (int n : {12, 16, 20}) {
        Rng rng(static_cast<std::uint64_t>(n));
        int found = 0;
        for (int k = 0; k < 10; ++k) {
            const auto m = build_individual(InstanceSize(n), rng);
            const auto out = build_schedule(m);
            if (out.feasible()) {
                expect_sound(m, out);
                ++found;
            }
        }
        EXPECT_GT(found, 0) << "n=" << n;
    }
}

TEST(BuildSchedule, Deterministic) {
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
        const auto m = build_individual(InstanceSize(10), rng);
        const auto a = build_schedule(m);
        const auto b = build_schedule(m);
        ASSERT_EQ(a.status, b.status);
        ASSERT_EQ(a.schedule, b.schedule);
        ASSERT_EQ(a.certificate.nodes, b.certificate.nodes);
    }
}

TEST(BuildSchedule, BudgetExhaustionIsFlagged) {
    Rng rng(3);
    const auto m = build_individual(InstanceSize(12), rng);
    const auto out = build_schedule(m, 1);
    if (!out.feasible()) {
        EXPECT_TRUE(out.certificate.budget_exhausted);
    }
    EXPECT_LE(out.certificate.nodes, 2u);
}

TEST(Scheduler, CachesVerdicts) {
    Scheduler s;
    const auto m = mttp::testing::four_team_travel();
    EXPECT_TRUE(s.is_schedulable(m));
    EXPECT_TRUE(s.is_schedulable(m));
    EXPECT_EQ(s.cache_size(), 1u);
    EXPECT_TRUE(is_schedulable(m));
}
