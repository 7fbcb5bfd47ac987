#include "hdvlab/normality/normality.hpp"
#include "hdvlab/power/power_tools.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace hdv;
using hdv::testing::el;
using hdv::testing::kind_of;
using hdv::testing::random_element;
using hdv::testing::random_unit;
using Verdict = NormalityClass::Verdict;

TEST(ClassifyNormal, Q2Examples) {
    FieldPtr q2 = parse_field("padic(2)");
    EXPECT_EQ(classify_normal(el(q2, "3")).verdict, Verdict::ANormal);
    NormalityClass five = classify_normal(el(q2, "5"));
    ASSERT_EQ(five.verdict, Verdict::CNormal);
    EXPECT_TRUE((*five.pi1 - 2).is_zero());
    EXPECT_TRUE((*five.a - 1).is_zero());
    EXPECT_TRUE((*five.b - 1).is_zero());
    EXPECT_EQ(five.root_field_agrees, std::optional<bool>(true));
    NormalityClass seventeen = classify_normal(el(q2, "17"));
    ASSERT_EQ(seventeen.verdict, Verdict::InKp);
    EXPECT_TRUE((seventeen.root->pow(2) - 17).is_zero());
    // 1 + 4*3: v(pi) = 2, residue of a is 1 and X^2 + X + 1 is irreducible over F_2
    EXPECT_EQ(classify_normal(el(q2, "13")).verdict, Verdict::CNormal);
    EXPECT_EQ(classify_normal(el(q2, "-7")).verdict, Verdict::InKp);
}

TEST(ClassifyNormal, GaussBNormal) {
    FieldPtr k = parse_field("gauss(eis(padic(2), X^2-2); x)");
    NormalityClass c = classify_normal(el(k, "1 + 2x"));
    ASSERT_EQ(c.verdict, Verdict::BNormal);
    EXPECT_EQ(c.v_pi, Value(2));
    EXPECT_EQ(c.threshold, Rational(4));
    EXPECT_TRUE((*c.pi1 - el(k, "th")).is_zero());
    EXPECT_TRUE((*c.a - el(k, "x")).is_zero());
}

TEST(ClassifyNormal, NotNormalImprovementRaisesValue) {
    FieldPtr k = parse_field("eis(padic(2), X^2-2)");
    // 1 + th^2 = 3: v(pi) = 2 < 4 even with square residue
    NormalityClass c = classify_normal(el(k, "3"));
    ASSERT_EQ(c.verdict, Verdict::NotNormal);
    EXPECT_GT(((*c.improvement) * el(k, "3") - 1).val(), c.v_pi);
    EXPECT_TRUE((c.improvement_root->pow(2) - *c.improvement).is_zero());
}

TEST(ClassifyNormal, Errors) {
    FieldPtr q2 = parse_field("padic(2)");
    EXPECT_EQ(kind_of([&] { classify_normal(el(q2, "2")); }), ErrorKind::NotInNabla0);
    FieldPtr l = parse_field("laurent(ratfun(2;x))");
    EXPECT_EQ(kind_of([&] { classify_normal(el(l, "1 + t")); }), ErrorKind::WrongCharacteristic);
}

TEST(Normalize, Examples) {
    FieldPtr q2 = parse_field("padic(2)");
    auto ctx = make_cyclotomic(q2);
    NormalizeResult three = normalize(el(q2, "3"));
    EXPECT_FALSE(three.in_kp);
    EXPECT_TRUE(three.value.identical(el(q2, "3")));
    NormalizeResult r27 = normalize(el(q2, "27"));
    ASSERT_FALSE(r27.in_kp);
    EXPECT_TRUE(same_coset(r27.value, el(q2, "3"), ctx));
    EXPECT_GE((r27.value - 1).val(), Value(1));
    NormalizeResult r17 = normalize(el(q2, "17"));
    ASSERT_TRUE(r17.in_kp);
    EXPECT_TRUE((r17.value.pow(2) - 17).is_zero());
}

TEST(Normalize, ReachesTheNormalRepresentative) {
    FieldPtr k = parse_field("eis(padic(2), X^2-2)");
    NormalizeResult r = normalize(el(k, "3"));
    auto ctx = make_cyclotomic(k);
    if (r.in_kp) {
        EXPECT_TRUE((r.value.pow(2) - 3).is_zero());
    } else {
        EXPECT_TRUE(r.last.is_normal());
        EXPECT_TRUE(same_coset(r.value, el(k, "3"), ctx));
    }
    EXPECT_GE(r.steps, 1);
}

namespace {

const char* kModels[] = {"padic(2)", "padic(3)", "eis(padic(2), X^2-2)", "eis(padic(3), X^2-3)",
                         "gauss(eis(padic(2), X^2-2); x)"};

}  // namespace

TEST(Properties, NormalElementsAreMaximalInTheirCoset) {
    std::mt19937 rng(31);
    for (const char* d : kModels) {
        FieldPtr k = parse_field(d, 32);
        const long long p = k->p();
        int normals = 0;
        for (int i = 0; i < 40 && normals < 4; ++i) {
            FieldElement lam = 1 + random_element(*k, rng, 1, 3);
            NormalityClass c = classify_normal(lam);
            if (!c.is_normal()) continue;
            ++normals;
            for (int j = 0; j < 50; ++j) {
                FieldElement mate = lam * random_unit(*k, rng, 5).pow(p);
                EXPECT_GE(c.v_pi, (mate - 1).val()) << d << " " << lam.str();
            }
        }
        EXPECT_GT(normals, 0) << d;
    }
}

TEST(Properties, NormalizeIsStableOnCosets) {
    std::mt19937 rng(32);
    for (const char* d : kModels) {
        FieldPtr k = parse_field(d, 32);
        auto ctx = make_cyclotomic(k);
        const long long p = k->p();
        for (int i = 0; i < 10; ++i) {
            FieldElement lam = 1 + random_element(*k, rng, 1, 3);
            FieldElement u = 1 + random_element(*k, rng, 1, 2);
            NormalizeResult a = normalize(lam), b = normalize(lam * u.pow(p));
            ASSERT_EQ(a.in_kp, b.in_kp) << d << " " << lam.str();
            if (a.in_kp) continue;
            EXPECT_TRUE(same_coset(a.value, b.value, ctx)) << d;
            EXPECT_EQ((a.value - 1).val(), (b.value - 1).val()) << d;
        }
    }
}
