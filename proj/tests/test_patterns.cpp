#include <gtest/gtest.h>

#include "mttp/patterns.hpp"
#include "test_support.hpp"

using namespace mttp;

TEST(SwapComplement, KnownExample) {
    EXPECT_EQ(swap_complement(TravelSequence{1, 0, 0, 0, 1, 1}), (TravelSequence{0, 1, 1, 1, 0, 0}));
    EXPECT_EQ(swap_complement(TravelSequence(6, 0)), TravelSequence(6, 1));
}

TEST(SwapComplement, Involution) {
    Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
        TravelSequence s(static_cast<std::size_t>(rng.below(40)));
        for (auto& v : s) v = static_cast<std::uint8_t>(rng.below(2));
        const auto c = swap_complement(s);
        ASSERT_EQ(c.size(), s.size());
        ASSERT_EQ(swap_complement(c), s);
    }
}

TEST(RandomSequence, StructuralPostconditions) {
    for (int n : {4, 6, 10, 20}) {
        const InstanceSize size(n);
        Rng rng(static_cast<std::uint64_t>(n));
        for (int k = 0; k < 1000; ++k) {
            const auto s = random_sequence(size, rng);
            ASSERT_EQ(static_cast<int>(s.size()), size.weeks());
            ASSERT_LE(longest_run(s), kMaxRun);
            ASSERT_TRUE(is_mirror_complement(s));
        }
    }
}

TEST(RandomSequence, KnownRowIsReachable) {
    // The six-team example's first row is admissible and a long enough
    // stream produces it.
    const TravelSequence target{0, 0, 1, 1, 0, 1, 1, 0, 0, 1};
    ASSERT_LE(longest_run(target), kMaxRun);
    ASSERT_TRUE(is_mirror_complement(target));
    Rng rng(3);
    bool seen = false;
    for (int k = 0; k < 2000 && !seen; ++k) seen = random_sequence(InstanceSize(6), rng) == target;
    EXPECT_TRUE(seen);
}

TEST(BuildIndividual, SeedsCompleteToKnownTable) {
    const auto seeds = mttp::testing::six_team_seeds();
    EXPECT_EQ(complete_with_complements(InstanceSize(6), seeds), mttp::testing::six_team_travel());
    EXPECT_THROW((void)complete_with_complements(InstanceSize(4), seeds), ShapeError);
}

TEST(BuildIndividual, FuzzAgainstValidators) {
    for (int n : {4, 6, 8, 10}) {
        const InstanceSize size(n);
        Rng rng(1000 + static_cast<std::uint64_t>(n));
        for (int k = 0; k < 1000; ++k) {
            const auto m = build_individual(size, rng);
            const auto vs = validate_travel(m, size);
            ASSERT_TRUE(vs.empty()) << describe(vs.front());
            for (int w = 0; w < size.weeks(); ++w) {
                int away = 0;
                for (const auto& row : m.rows) away += row[w];
                ASSERT_EQ(away, n / 2);
            }
            const auto partners = canonical_partners(size);
            for (int t = 0; t < n; ++t) {
                ASSERT_EQ(m.rows[partners[t]], swap_complement(m.rows[t]));
                ASSERT_EQ(complement_partner(m, t), partners[t]);
            }
        }
    }
}

TEST(BuildIndividual, Deterministic) {
    Rng a(77);
    Rng b(77);
    for (int k = 0; k < 50; ++k) {
        ASSERT_EQ(build_individual(InstanceSize(12), a), build_individual(InstanceSize(12), b));
    }
}

TEST(Rng, StreamIsFixedBySeed) {
    // std::mt19937_64 is pinned by the standard: its 10000th output for the
    // default seed is 9981545732273789042.
    std::mt19937_64 reference;
    reference.discard(9999);
    EXPECT_EQ(reference(), 9981545732273789042ULL);

    Rng r(5489);
    for (int i = 0; i < 9999; ++i) (void)r.next();
    EXPECT_EQ(r.next(), 9981545732273789042ULL);

    Rng u(1);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_LT(u.below(7), 7u);
        const double x = u.unit();
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
    }
}
