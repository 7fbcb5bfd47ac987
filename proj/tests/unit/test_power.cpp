#include "hdvlab/normality/normality.hpp"
#include "hdvlab/power/power_tools.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hdv;
using hdv::testing::congruent;
using hdv::testing::el;
using hdv::testing::kind_of;
using hdv::testing::random_element;
using hdv::testing::random_unit;

namespace {

const char* kCharZeroModels[] = {"padic(2)", "padic(3)", "eis(padic(2), X^2-2)", "eis(padic(3), X^2-3)",
                                 "gauss(padic(2); x)"};

}  // namespace

TEST(InNabla, Examples) {
    FieldPtr q2 = parse_field("padic(2)");
    EXPECT_TRUE(in_nabla(el(q2, "17"), Rational(2)));
    EXPECT_FALSE(in_nabla(el(q2, "5"), Rational(2)));
    EXPECT_TRUE(in_nabla(el(q2, "1"), Rational(1000)));
}

TEST(PthRoot, SeventeenOverQ2) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    PthPowerVerdict r = pth_root(el(q2, "17"), ctx);
    ASSERT_TRUE(r.is_pth_power());
    // oracle: square roots of 17 modulo 2^10
    std::set<long> roots;
    for (long c = 0; c < 1024; ++c)
        if ((c * c - 17) % 1024 == 0) roots.insert(c);
    bool matched = false;
    for (long c : roots) matched = matched || congruent(*r.root, q2->from_int(c), Value(10));
    EXPECT_TRUE(matched);
    EXPECT_TRUE(congruent(*r.root, q2->from_int(9), Value(4)));
}

TEST(PthRoot, UnitsOfQ2AgainstSquaresModEight) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    // oracle: odd squares modulo 2^10
    std::set<long> squares;
    for (long c = 1; c < 1024; c += 2) squares.insert(c * c % 1024);
    for (long n = 1; n < 200; n += 2) {
        bool oracle = squares.count(n % 1024) > 0;
        PthPowerVerdict r = pth_root(q2->from_int(n), ctx);
        EXPECT_EQ(r.is_pth_power(), oracle) << n;
        EXPECT_EQ(r.is_pth_power(), n % 8 == 1) << n;
    }
    EXPECT_EQ(pth_root(el(q2, "5"), ctx).outcome, PthPowerVerdict::Outcome::NotPthPower);
    EXPECT_EQ(pth_root(el(q2, "-1"), ctx).outcome, PthPowerVerdict::Outcome::NotPthPower);
    EXPECT_EQ(pth_root(el(q2, "2"), ctx).outcome, PthPowerVerdict::Outcome::NotPthPower);
    EXPECT_TRUE(pth_root(el(q2, "68"), ctx).is_pth_power());
}

TEST(PthRoot, FrobeniusInCharacteristicP) {
    FieldPtr l = parse_field("laurent(ratfun(2;x))");
    auto ctx = make_cyclotomic(l);
    PthPowerVerdict r = pth_root(el(l, "x^2 + t^2"), ctx);
    ASSERT_TRUE(r.is_pth_power());
    EXPECT_TRUE((*r.root - el(l, "x + t")).is_zero());
    EXPECT_FALSE(pth_root(el(l, "x + t^2"), ctx).is_pth_power());
    EXPECT_FALSE(pth_root(el(l, "1 + t"), ctx).is_pth_power());
}

TEST(SameCoset, Examples) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    EXPECT_TRUE(same_coset(el(q2, "17"), el(q2, "1"), ctx));
    EXPECT_TRUE(pth_root(el(q2, "17") / el(q2, "1"), ctx).is_pth_power());
    EXPECT_FALSE(same_coset(el(q2, "5"), el(q2, "1"), ctx));
    EXPECT_TRUE(same_coset(el(q2, "3"), el(q2, "3"), ctx));
    EXPECT_TRUE(same_coset(el(q2, "3"), el(q2, "27"), ctx));
}

TEST(KummerRank, Examples) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    EXPECT_EQ(kummer_rank({el(q2, "3"), el(q2, "5")}, ctx), 2);
    EXPECT_EQ(kummer_rank({el(q2, "17")}, ctx), 0);
    EXPECT_EQ(kummer_rank({}, ctx), 0);
    EXPECT_EQ(kummer_rank({el(q2, "3"), el(q2, "5"), el(q2, "15")}, ctx), 2);
    EXPECT_EQ(kummer_rank({el(q2, "-1"), el(q2, "2"), el(q2, "5")}, ctx), 3);
}

TEST(Albert, PrimeTwo) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    EXPECT_TRUE(albert_member(el(q2, "3"), ctx));
    EXPECT_FALSE(albert_member(el(q2, "1"), ctx));
    FieldElement avg = albert_average(el(q2, "3"), ctx);
    EXPECT_TRUE(avg.identical(q2->coerce(el(q2, "3"))));
}

TEST(Albert, PrimeThreeAverage) {
    FieldPtr k = parse_field("eis(padic(3), X^3-3)", 40);
    auto ctx = make_cyclotomic(k);
    ASSERT_EQ(ctx.m, 2);
    FieldElement lam = ctx.field->coerce(el(k, "1 + th")) + ctx.epsilon * el(k, "th^2");
    FieldElement avg = albert_average(lam, ctx);
    EXPECT_TRUE((avg - lam * ctx.phi(lam).pow(2)).is_zero());
    EXPECT_TRUE(pth_root(albert_defect(avg, ctx), ctx).is_pth_power());
}

TEST(Properties, NablaGammaPrimeConsistsOfPthPowers) {
    std::mt19937 rng(21);
    for (const char* d : kCharZeroModels) {
        FieldPtr k = parse_field(d, 32);
        auto ctx = make_cyclotomic(k);
        const int lo = static_cast<int>(floor_of(gamma_prime(*k))) + 1;
        for (int i = 0; i < 100; ++i) {
            FieldElement beta = 1 + random_element(*k, rng, lo, lo + 3);
            PthPowerVerdict r = pth_root(beta, ctx);
            ASSERT_TRUE(r.is_pth_power()) << d << " " << beta.str() << " " << r.note;
            EXPECT_TRUE((r.root->pow(k->p()) - beta).is_zero()) << d;
        }
    }
}

TEST(Properties, PthPowersOfRandomUnits) {
    std::mt19937 rng(22);
    for (const char* d : kCharZeroModels) {
        FieldPtr k = parse_field(d, 32);
        auto ctx = make_cyclotomic(k);
        for (int i = 0; i < 100; ++i) {
            FieldElement a = random_unit(*k, rng, 5);
            FieldElement ap = a.pow(k->p());
            PthPowerVerdict r = pth_root(ap, ctx);
            ASSERT_TRUE(r.is_pth_power()) << d << " " << a.str() << " " << r.note;
            EXPECT_TRUE((r.root->pow(k->p()) - ap).is_zero()) << d;
        }
    }
}

TEST(Properties, SingletonRankMatchesVerdict) {
    std::mt19937 rng(23);
    for (const char* d : kCharZeroModels) {
        FieldPtr k = parse_field(d, 32);
        auto ctx = make_cyclotomic(k);
        for (int i = 0; i < 30; ++i) {
            FieldElement lam = random_unit(*k, rng, 6);
            PthPowerVerdict r = pth_root(lam, ctx);
            ASSERT_NE(r.outcome, PthPowerVerdict::Outcome::Undecided) << d;
            EXPECT_EQ(kummer_rank({lam}, ctx) == 1, r.outcome == PthPowerVerdict::Outcome::NotPthPower) << d;
        }
    }
}

TEST(Properties, SameCosetIsAnEquivalence) {
    std::mt19937 rng(24);
    for (const char* d : kCharZeroModels) {
        FieldPtr k = parse_field(d, 32);
        auto ctx = make_cyclotomic(k);
        const long long p = k->p();
        for (int i = 0; i < 20; ++i) {
            FieldElement x = 1 + random_element(*k, rng, 1, 3);
            // y and z share x's coset half of the time
            FieldElement y = (i % 2) ? x * random_unit(*k, rng).pow(p) : 1 + random_element(*k, rng, 1, 3);
            FieldElement z = (i % 3) ? y * random_unit(*k, rng).pow(p) : 1 + random_element(*k, rng, 1, 3);
            EXPECT_TRUE(same_coset(x, x, ctx));
            bool xy = same_coset(x, y, ctx), yx = same_coset(y, x, ctx);
            EXPECT_EQ(xy, yx) << d;
            if (xy && same_coset(y, z, ctx)) EXPECT_TRUE(same_coset(x, z, ctx)) << d;
        }
    }
}
