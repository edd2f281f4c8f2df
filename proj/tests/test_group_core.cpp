#include <gtest/gtest.h>

#include <random>
#include <set>

#include "torsion/group.hpp"

using namespace torsion;

namespace {

const std::vector<GroupSpec> kSpecs{
    GroupSpec(1, 1), GroupSpec(2, 1), GroupSpec(3, 1), GroupSpec(5, 2),
    GroupSpec(3, 5), GroupSpec(4, 3), GroupSpec(2, 2), GroupSpec(450, 7)};

GroupElement random_element(const GroupSpec& g, std::mt19937_64& rng) {
    return element_at(g, rng() % g.order);
}

// Order by repeated multiplication, independent of the closed form.
u64 naive_order(const GroupSpec& g, const GroupElement& x) {
    GroupElement acc = x;
    u64 ord = 1;
    while (!(acc == identity())) {
        acc = multiply(g, acc, x);
        ++ord;
    }
    return ord;
}

} // namespace

TEST(GroupSpec, Construction) {
    const GroupSpec g(450, 7);
    EXPECT_EQ(g.two_n, 900u);
    EXPECT_EQ(g.order, 12600u);
    EXPECT_THROW(GroupSpec(0, 3), std::invalid_argument);
    EXPECT_THROW(GroupSpec(3, 0), std::invalid_argument);
}

TEST(GroupSpec, ClosedFormValidity) {
    EXPECT_TRUE(GroupSpec(450, 7).closed_form_valid());
    EXPECT_TRUE(GroupSpec(4, 3).closed_form_valid());
    EXPECT_FALSE(GroupSpec(450, 2).closed_form_valid());   // even
    EXPECT_FALSE(GroupSpec(450, 9).closed_form_valid());   // composite
    EXPECT_FALSE(GroupSpec(450, 3).closed_form_valid());   // divides n
    EXPECT_FALSE(GroupSpec(450, 1).closed_form_valid());
}

TEST(GroupElement, PresentationRelations) {
    for (const GroupSpec& g : kSpecs) {
        const GroupElement a = alpha(g), b = beta(g), c = gamma(g);
        EXPECT_EQ(power(g, a, static_cast<std::int64_t>(g.two_n)), identity());
        EXPECT_EQ(multiply(g, b, b), power(g, a, static_cast<std::int64_t>(g.n)));
        // b a b^-1 = a^-1
        EXPECT_EQ(multiply(g, multiply(g, b, a), inverse(g, b)), inverse(g, a));
        EXPECT_EQ(power(g, c, static_cast<std::int64_t>(g.m)), identity());
        EXPECT_EQ(multiply(g, a, c), multiply(g, c, a));
        EXPECT_EQ(multiply(g, b, c), multiply(g, c, b));
    }
}

TEST(GroupElement, AssociativityRandomTriples) {
    std::mt19937_64 rng(0xabcdef12u);
    for (const GroupSpec& g : kSpecs) {
        for (int t = 0; t < 2000; ++t) {
            const GroupElement x = random_element(g, rng);
            const GroupElement y = random_element(g, rng);
            const GroupElement z = random_element(g, rng);
            EXPECT_EQ(multiply(g, multiply(g, x, y), z), multiply(g, x, multiply(g, y, z)));
        }
    }
}

TEST(GroupElement, IdentityAndInverses) {
    std::mt19937_64 rng(0x13572468u);
    for (const GroupSpec& g : kSpecs) {
        const u64 probes = std::min<u64>(g.order, 500);
        for (u64 t = 0; t < probes; ++t) {
            const GroupElement x =
                g.order <= 500 ? element_at(g, t) : random_element(g, rng);
            EXPECT_EQ(multiply(g, x, identity()), x);
            EXPECT_EQ(multiply(g, identity(), x), x);
            EXPECT_EQ(multiply(g, x, inverse(g, x)), identity());
            EXPECT_EQ(multiply(g, inverse(g, x), x), identity());
        }
    }
}

TEST(GroupElement, KnownProducts) {
    const GroupSpec g(3, 5);
    // (a^2 b c^3)(a^4 b c^4): the b-conjugation flips the sign of the second
    // a-exponent and b^2 contributes a^n.
    const GroupElement x = make_element(g, 2, 1, 3);
    const GroupElement y = make_element(g, 4, 1, 4);
    EXPECT_EQ(multiply(g, x, y), make_element(g, 1, 0, 2));
    // (a b)(a) = a (b a b^-1) b = e b ... = b when n = 3? (1 - 1) = 0.
    EXPECT_EQ(multiply(g, make_element(g, 1, 1, 0), alpha(g)), make_element(g, 0, 1, 0));
    EXPECT_EQ(multiply(g, alpha(g), beta(g)), make_element(g, 1, 1, 0));
    // b^2 = a^3
    EXPECT_EQ(multiply(g, beta(g), beta(g)), make_element(g, 3, 0, 0));
}

TEST(GroupElement, PowerMatchesRepeatedMultiply) {
    std::mt19937_64 rng(0x77441122u);
    for (const GroupSpec& g : kSpecs) {
        for (int t = 0; t < 200; ++t) {
            const GroupElement x = random_element(g, rng);
            const std::int64_t e = static_cast<std::int64_t>(rng() % 41) - 20;
            GroupElement expect = identity();
            const GroupElement step = e >= 0 ? x : inverse(g, x);
            for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k)
                expect = multiply(g, expect, step);
            EXPECT_EQ(power(g, x, e), expect) << "e=" << e;
        }
    }
}

TEST(ElementOrder, MatchesNaiveOrder) {
    for (const GroupSpec& g : kSpecs) {
        if (g.order > 300) continue;
        for (u64 idx = 0; idx < g.order; ++idx) {
            const GroupElement x = element_at(g, idx);
            EXPECT_EQ(element_order(g, x), naive_order(g, x)) << "idx=" << idx;
        }
    }
    // spot checks on the large spec
    const GroupSpec big(450, 7);
    std::mt19937_64 rng(0x99001122u);
    for (int t = 0; t < 100; ++t) {
        const GroupElement x = random_element(big, rng);
        EXPECT_EQ(element_order(big, x), naive_order(big, x));
    }
}

TEST(ElementOrder, KnownValues) {
    const GroupSpec g(3, 5);
    EXPECT_EQ(element_order(g, identity()), 1u);
    EXPECT_EQ(element_order(g, alpha(g)), 6u);
    EXPECT_EQ(element_order(g, beta(g)), 4u);
    EXPECT_EQ(element_order(g, make_element(g, 1, 1, 0)), 4u);  // a b
    EXPECT_EQ(element_order(g, gamma(g)), 5u);
    EXPECT_EQ(element_order(g, make_element(g, 3, 0, 0)), 2u);  // a^n
    EXPECT_EQ(element_order(g, make_element(g, 0, 1, 1)), 20u); // b c
    EXPECT_EQ(element_order(g, make_element(g, 1, 0, 1)), 30u); // a c
}

TEST(ElementOrder, DividesGroupOrder) {
    for (const GroupSpec& g : kSpecs) {
        if (g.order > 500) continue;
        for (u64 idx = 0; idx < g.order; ++idx)
            EXPECT_EQ(g.order % element_order(g, element_at(g, idx)), 0u);
    }
}

TEST(CanonicalIndex, BijectiveRoundTrip) {
    for (const GroupSpec& g : kSpecs) {
        if (g.order > 1000) continue;
        std::set<u64> seen;
        for (u64 idx = 0; idx < g.order; ++idx) {
            const GroupElement x = element_at(g, idx);
            EXPECT_TRUE(is_valid(g, x));
            EXPECT_EQ(canonical_index(g, x), idx);
            seen.insert(idx);
        }
        EXPECT_EQ(seen.size(), g.order);
        EXPECT_THROW(element_at(g, g.order), std::out_of_range);
    }
}

TEST(CanonicalIndex, LayoutFormula) {
    const GroupSpec g(3, 5);
    // (i * 2 + eps) * m + k
    EXPECT_EQ(canonical_index(g, make_element(g, 2, 1, 3)), (2 * 2 + 1) * 5 + 3);
    EXPECT_EQ(canonical_index(g, identity()), 0u);
    EXPECT_EQ(canonical_index(g, gamma(g)), 1u);
}

TEST(MakeElement, NormalizesExponents) {
    const GroupSpec g(3, 5);
    EXPECT_EQ(make_element(g, 6, 2, 5), identity());
    EXPECT_EQ(make_element(g, 7, 3, 6), make_element(g, 1, 1, 1));
}

TEST(Render, KnownForms) {
    const GroupSpec g(450, 7);
    EXPECT_EQ(render_element(identity()), "e");
    EXPECT_EQ(render_element(alpha(g)), "a");
    EXPECT_EQ(render_element(beta(g)), "b");
    EXPECT_EQ(render_element(gamma(g)), "c");
    EXPECT_EQ(render_element(make_element(g, 3, 1, 2)), "a^3 b c^2");
    EXPECT_EQ(render_element(make_element(g, 1, 1, 0)), "a b");
    EXPECT_EQ(render_element(make_element(g, 0, 0, 5)), "c^5");
}
