#include <gtest/gtest.h>

#include "torsion/counting.hpp"
#include "torsion/lattice.hpp"

using namespace torsion;

namespace {

u64 smallest_valid_p(u64 n) {
    for (u64 p = 3;; p += 2)
        if (is_prime(p) && n % p != 0) return p;
}

} // namespace

TEST(ClosedCounts, FlagshipValues) {
    EXPECT_EQ(count_subgroups_closed(450, 7), 2472u);  // 2 * (27 + 1209)
    EXPECT_EQ(count_cyclic_closed(450, 7), 954u);      // 2 * (27 + 450)
}

TEST(ClosedCounts, SmallKnownValues) {
    EXPECT_EQ(count_subgroups_closed(1, 3), 6u);  // C12 has tau(12) subgroups
    EXPECT_EQ(count_cyclic_closed(1, 3), 6u);
    EXPECT_EQ(count_subgroups_closed(3, 5), 16u);
    EXPECT_EQ(count_cyclic_closed(3, 5), 14u);
    EXPECT_EQ(count_subgroups_closed(2, 3), 12u);
    EXPECT_EQ(count_cyclic_closed(2, 3), 10u);
}

TEST(ClosedCounts, MatchBruteForce) {
    for (const auto& [n, p] : std::vector<std::pair<u64, u64>>{
             {1, 3}, {2, 3}, {3, 5}, {4, 5}, {5, 3}, {6, 5}, {10, 3}, {12, 7}}) {
        const GroupSpec g(n, p);
        const auto subs = all_subgroups(g);
        EXPECT_EQ(count_subgroups_closed(n, p), subs.size()) << n << "," << p;
        EXPECT_EQ(count_cyclic_closed(n, p), count_cyclic(g, subs)) << n << "," << p;
    }
}

TEST(ClosedCounts, HypothesisViolations) {
    EXPECT_THROW(count_subgroups_closed(450, 2), hypothesis_error);
    EXPECT_THROW(count_subgroups_closed(450, 9), hypothesis_error);
    EXPECT_THROW(count_subgroups_closed(450, 1), hypothesis_error);
    EXPECT_THROW(count_subgroups_closed(5, 5), hypothesis_error);
    EXPECT_THROW(count_cyclic_closed(6, 3), hypothesis_error);
    EXPECT_THROW(count_subgroups_closed(0, 3), hypothesis_error);
}

TEST(GapT, DefinitionHolds) {
    EXPECT_EQ(gap_t(450, 7), 12600u - 954u);
    for (u64 n = 1; n <= 40; ++n) {
        const u64 p = smallest_valid_p(n);
        EXPECT_EQ(gap_t(n, p), 4 * n * p - count_cyclic_closed(n, p));
    }
}

TEST(GapT, CountsNonCyclicSubgroupsOfTheOrderGapOnly) {
    // t is |G| minus the cyclic-subgroup count; sanity-check the quantity
    // against brute force through the same identity.
    const GroupSpec g(5, 3);
    const auto subs = all_subgroups(g);
    EXPECT_EQ(gap_t(5, 3), g.order - count_cyclic(g, subs));
}

TEST(GapPrime, StatedFormIsExact) {
    const GapCheck c = gap_t_prime(5, 3);
    EXPECT_EQ(c.stated, 42u);  // 2*5*(2*3-1) - 8
    EXPECT_EQ(c.direct, 42u);
    EXPECT_TRUE(c.matches);
    for (const auto& [q, p] : std::vector<std::pair<u64, u64>>{
             {5, 3}, {7, 3}, {7, 5}, {11, 3}, {13, 7}, {31, 29}, {97, 89}})
        EXPECT_TRUE(gap_t_prime(q, p).matches) << q << "," << p;
}

TEST(GapSquare, StatedFormIsExact) {
    const GapCheck c = gap_t_square(5, 3);
    EXPECT_EQ(c.stated, 238u);  // 2*25*5 - 12
    EXPECT_TRUE(c.matches);
    for (const auto& [q, p] : std::vector<std::pair<u64, u64>>{{5, 3}, {7, 5}, {11, 3}, {13, 11}})
        EXPECT_TRUE(gap_t_square(q, p).matches) << q << "," << p;
}

TEST(GapPower, StatedFormIsExactAndSubsumesLowExponents) {
    const GapCheck c = gap_t_power(5, 3, 3);
    EXPECT_EQ(c.stated, 1234u);  // 2*125*5 - 4*4
    EXPECT_TRUE(c.matches);
    for (const auto& [q, p] : std::vector<std::pair<u64, u64>>{{5, 3}, {7, 5}, {11, 7}}) {
        for (u64 rexp = 1; rexp <= 5; ++rexp)
            EXPECT_TRUE(gap_t_power(q, rexp, p).matches) << q << "^" << rexp;
        EXPECT_EQ(gap_t_power(q, 1, p).stated, gap_t_prime(q, p).stated);
        EXPECT_EQ(gap_t_power(q, 2, p).stated, gap_t_square(q, p).stated);
    }
}

TEST(GapTwoPower, StatedFormOvershootsByTwoToTheR) {
    const TwoPowerGapCheck c = gap_t_two_power(1, 3);
    EXPECT_EQ(c.stated, 16u);    // 2*(4*3-1) - 2*tau(4)
    EXPECT_EQ(c.expanded, 14u);  // 2^3*3 - 2*(3 + 2)
    EXPECT_EQ(c.direct, 14u);
    EXPECT_FALSE(c.stated_matches);
    EXPECT_TRUE(c.expanded_matches);
    for (u64 rexp = 1; rexp <= 6; ++rexp) {
        for (u64 p : {3u, 5u, 7u, 11u}) {
            const TwoPowerGapCheck k = gap_t_two_power(rexp, p);
            EXPECT_TRUE(k.expanded_matches) << "r=" << rexp << " p=" << p;
            EXPECT_FALSE(k.stated_matches) << "r=" << rexp << " p=" << p;
            EXPECT_EQ(k.stated - k.direct, checked_pow(2, rexp)) << "r=" << rexp;
        }
    }
}

TEST(GapChecks, HypothesisViolations) {
    EXPECT_THROW(gap_t_prime(4, 3), hypothesis_error);   // q not prime
    EXPECT_THROW(gap_t_prime(2, 3), hypothesis_error);   // q even
    EXPECT_THROW(gap_t_prime(5, 7), hypothesis_error);   // p >= q
    EXPECT_THROW(gap_t_prime(5, 5), hypothesis_error);
    EXPECT_THROW(gap_t_square(9, 3), hypothesis_error);
    EXPECT_THROW(gap_t_power(5, 0, 3), hypothesis_error);
    EXPECT_THROW(gap_t_two_power(0, 3), hypothesis_error);
    EXPECT_THROW(gap_t_two_power(2, 2), hypothesis_error);  // p even
    EXPECT_THROW(gap_t_two_power(2, 9), hypothesis_error);  // p composite
}

TEST(CompareNsCys, EqualExactlyAtOne) {
    for (u64 p : {3u, 5u, 7u}) {
        const NsCysComparison c = compare_ns_cys(1, p);
        EXPECT_EQ(c.direction, CompareDirection::equal);
        EXPECT_EQ(c.difference, 0u);
        EXPECT_TRUE(c.total_at_most_cyclic);
    }
}

TEST(CompareNsCys, TotalStrictlyExceedsCyclicPastOne) {
    const NsCysComparison c = compare_ns_cys(2, 3);
    EXPECT_EQ(c.subgroup_count, 12u);
    EXPECT_EQ(c.cyclic_count, 10u);
    EXPECT_EQ(c.difference, 2u);
    EXPECT_EQ(c.direction, CompareDirection::subgroups_exceed);
    EXPECT_FALSE(c.total_at_most_cyclic);
    for (u64 n = 2; n <= 60; ++n) {
        const u64 p = smallest_valid_p(n);
        const NsCysComparison k = compare_ns_cys(n, p);
        EXPECT_EQ(k.direction, CompareDirection::subgroups_exceed) << "n=" << n;
        EXPECT_FALSE(k.total_at_most_cyclic) << "n=" << n;
        EXPECT_EQ(k.difference, tau(p) * (sigma(n) - n)) << "n=" << n;
    }
}

TEST(CountReport, VerdictAssignment) {
    const CountReport match = make_count_report(3, 5, "subgroups", 16, 16, "src");
    EXPECT_EQ(match.verdict, Verdict::match);
    EXPECT_TRUE(match.notes.empty());
    const CountReport mismatch = make_count_report(3, 5, "subgroups", 16, 17, "src");
    EXPECT_EQ(mismatch.verdict, Verdict::mismatch);
    EXPECT_FALSE(mismatch.notes.empty());
    const CountReport skipped = make_count_report(450, 7, "subgroups", 2472, std::nullopt, "src");
    EXPECT_EQ(skipped.verdict, Verdict::oracle_skipped);
    EXPECT_FALSE(skipped.oracle.has_value());
}
