#include "hdvlab/brauer/brauer_engine.hpp"
#include "hdvlab/core/hensel.hpp"
#include "hdvlab/core/parse.hpp"

#include "gen.hpp"

#include <gtest/gtest.h>

using namespace hdv;
using hdv::testing::el;
using hdv::testing::kind_of;

namespace {

std::vector<CyclicAlgebra> as_factors(const FieldPtr& k, const std::vector<std::string>& cs,
                                      const std::vector<std::string>& as) {
    std::vector<CyclicAlgebra> out;
    for (std::size_t j = 0; j < cs.size(); ++j)
        out.push_back(make_cyclic(artin_schreier_adjoin(el(k, cs[j])), el(k, as[j])));
    return out;
}

bool has_failed_check(const DivisionCertificate& c, const std::string& name) {
    for (const auto& ch : c.checks)
        if (ch.name == name && !ch.holds) return true;
    return false;
}

}  // namespace

TEST(MakeCyclic, ArtinSchreierShiftsByOne) {
    FieldPtr k = parse_field("laurent(ratfun(2;x))");
    CyclicAlgebra a = make_cyclic(artin_schreier_adjoin(el(k, "t^-1")), el(k, "x"));
    const auto& l = *a.field;
    EXPECT_EQ(a.action, "th -> th + 1");
    EXPECT_TRUE((a.sigma_theta - l.generator() - 1).is_zero());
    // sigma is a field automorphism of order 2 fixing K
    FieldElement z = l.from_coeffs({el(k, "x + t"), el(k, "t^2")});
    FieldElement w = l.from_coeffs({el(k, "1/x"), el(k, "1 + t")});
    EXPECT_TRUE((a.apply(z * w) - a.apply(z) * a.apply(w)).is_zero());
    EXPECT_TRUE((a.apply(a.apply(z)) - z).is_zero());
    EXPECT_TRUE((a.apply(l.coerce(el(k, "x"))) - l.coerce(el(k, "x"))).is_zero());
    EXPECT_TRUE((z * a.apply(z) - l.coerce(l.norm(z))).is_zero());
}

TEST(MakeCyclic, KummerAndInertial) {
    FieldPtr q2 = parse_field("padic(2)");
    CyclicAlgebra r = make_cyclic(kummer_adjoin(el(q2, "3")), el(q2, "5"));
    EXPECT_EQ(r.action, "th -> -th");
    CyclicAlgebra u = make_cyclic(kummer_adjoin(el(q2, "5")), el(q2, "2"));
    EXPECT_EQ(u.action, "frobenius lift th -> -th");
    // oracle: (-th)^2 = 5, and -th differs from th since v(2 th) = 1
    EXPECT_TRUE((u.sigma_theta * u.sigma_theta - 5).is_zero());
    EXPECT_TRUE((u.sigma_theta + u.field->generator()).is_zero());
    // the residue map of Q2(sqrt 5) sends (1 + th)/2 to a root w of w^2 + w + 1 and sigma to w -> w^2
    FieldElement g = (1 + u.field->generator()) / u.field->from_int(2);
    ResidueElement gr = g.residue();
    EXPECT_EQ(u.apply(g).residue(), gr * gr);
    // a generic quadratic: X^2 + X + 1 over Q2
    ExtPtr l = adjoin(q2, parse_poly(*q2, "X^2 + X + 1"));
    CyclicAlgebra c = make_cyclic(l, el(q2, "2"));
    EXPECT_TRUE((c.sigma_theta + l->generator() + 1).is_zero());
    EXPECT_EQ(kind_of([&] { make_cyclic(l, q2->zero()); }), ErrorKind::PreconditionViolated);
}

TEST(MakeCyclic, PrimeThreeNeedsRootsOfUnity) {
    FieldPtr k = parse_field("eis(padic(3), X^2+3)");
    CyclicAlgebra a = make_cyclic(kummer_adjoin(el(k, "1 + th")), k->one());
    EXPECT_EQ(a.action, "th -> eps th");
    EXPECT_TRUE((a.apply(a.apply(a.apply(a.field->generator()))) - a.field->generator()).is_zero());
    FieldPtr q3 = parse_field("padic(3)");
    EXPECT_EQ(kind_of([&] { make_cyclic(kummer_adjoin(el(q3, "2")), q3->one()); }), ErrorKind::NotCyclicDetectable);
}

TEST(CertifyDivision, QuaternionBaseCase) {
    FieldPtr k = parse_field("laurent(ratfun(2;x))");
    TensorAlgebra d = tensor(as_factors(k, {"t^-1"}, {"x"}));
    DivisionCertificate c = certify_division(d);
    EXPECT_TRUE(c.division);
    EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(c.exponent, 2);
    EXPECT_EQ(c.residue_degree, 2);
    EXPECT_EQ(c.ramification, 2);
    EXPECT_FALSE(c.trusted_external);
    ASSERT_TRUE(c.tower.has_value());
    EXPECT_TRUE(c.tower->totally_ramified);
}

TEST(CertifyDivision, TotallyRamifiedCompositumOfRankTwo) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    TensorAlgebra d = tensor(as_factors(k, {"t^-1", "x^4*t^-1"}, {"x", "y"}));
    EXPECT_EQ(d.degree, 4);
    DivisionCertificate c = certify_division(d);
    EXPECT_TRUE(c.division);
    EXPECT_EQ(c.degree, 4);
    EXPECT_EQ(c.exponent, 2);
    // dx and dy are independent differentials
    EXPECT_TRUE(c.p_independent);
    EXPECT_EQ(c.degree * c.degree, c.residue_degree * c.ramification);
    EXPECT_EQ(c.ramification, 4);
    EXPECT_NE(c.residue_algebra.find("X^2 - (y)"), std::string::npos);
}

TEST(CertifyDivision, DependentResiduesFail) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    // d(x^3) = x^2 dx
    TensorAlgebra d = tensor(as_factors(k, {"t^-1", "x^4*t^-1"}, {"x", "x^3"}));
    DivisionCertificate c = assess_division(d);
    EXPECT_FALSE(c.division);
    EXPECT_TRUE(has_failed_check(c, "p-independent residues"));
    EXPECT_EQ(kind_of([&] { certify_division(d); }), ErrorKind::CheckFailed);
    try {
        certify_division(d);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("criterion inapplicable"), std::string::npos);
    }
}

TEST(CertifyDivision, CompositumWithInseparableResidueStepFails) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    TensorAlgebra d = tensor(as_factors(k, {"t^-1", "x*t^-1"}, {"x", "y"}));
    DivisionCertificate c = assess_division(d);
    EXPECT_FALSE(c.division);
    ASSERT_TRUE(c.tower.has_value());
    EXPECT_EQ(c.tower->rank, 2);
    EXPECT_EQ(c.tower->total_e, 2);
    EXPECT_TRUE(has_failed_check(c, "totally ramified"));
    EXPECT_TRUE(c.p_independent);
}

TEST(CertifyDivision, NonUnitSlotAndDependentGenerators) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    DivisionCertificate c = assess_division(tensor(as_factors(k, {"t^-1"}, {"t*x"})));
    EXPECT_TRUE(has_failed_check(c, "unit a1"));
    DivisionCertificate r = assess_division(tensor(as_factors(k, {"t^-1", "t^-1 + x^2 + x"}, {"x", "y"})));
    EXPECT_TRUE(has_failed_check(r, "tower rank"));
}

TEST(CertifyDivision, MixedCharacteristicKummer) {
    FieldPtr k = parse_field("gauss(eis(padic(2), X^2-2); x)");
    // 1 + th is ANormal, so the square root generates a totally ramified quadratic
    TensorAlgebra d = tensor({make_cyclic(kummer_adjoin(el(k, "1 + th")), el(k, "x"))});
    DivisionCertificate c = certify_division(d);
    EXPECT_EQ(c.tower->kind, "kummer");
    EXPECT_EQ(c.ramification, 2);
    EXPECT_EQ(kind_of([&] { certify_division(tensor({make_cyclic(kummer_adjoin(el(k, "1 + th")), el(k, "x^2 + 2"))})); }),
              ErrorKind::CheckFailed);
}

TEST(NormWitness, CertifiedFactorsHaveNoHits) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    for (auto [c, a] : {std::pair{"t^-1", "x"}, {"x^4*t^-1", "y"}}) {
        ExtPtr l = artin_schreier_adjoin(el(k, c));
        NormSample s = norm_witness_sample(*l, el(k, a), 1000, 42);
        EXPECT_EQ(s.trials, 1000);
        EXPECT_EQ(s.hits, 0);
        EXPECT_FALSE(s.min_gap.is_infinite());
        EXPECT_EQ(s.label, "falsification evidence, not proof");
    }
}

TEST(NormWitness, PlantedAndEmpty) {
    FieldPtr k = parse_field("laurent(ratfun(2;x))");
    ExtPtr l = artin_schreier_adjoin(el(k, "t^-1"));
    FieldElement planted = l->norm(1 + l->generator());
    NormSample s = norm_witness_sample(*l, planted, 50, 3);
    EXPECT_GE(s.hits, 1);
    ASSERT_FALSE(s.witnesses.empty());
    EXPECT_TRUE((l->norm(s.witnesses[0]) - planted).is_zero());
    NormSample e = norm_witness_sample(*l, k->one(), 0);
    EXPECT_EQ(e.trials, 0);
    EXPECT_EQ(e.hits, 0);
    EXPECT_TRUE(e.min_gap.is_infinite());
}

TEST(BuildWMu, DegreeTwo) {
    FieldPtr k = parse_field("gauss(eis(padic(2), X^2-2); x, y)");
    auto [w, c] = build_w_mu(k, {el(k, "x")}, {el(k, "y")}, 1);
    EXPECT_EQ(w.degree, 2);
    EXPECT_EQ(c.degree, 2);
    EXPECT_EQ(c.exponent, 2);
    EXPECT_TRUE(c.p_independent);
    EXPECT_TRUE(c.trusted_external);
    ASSERT_EQ(c.provenance.size(), 1u);
    EXPECT_EQ(c.provenance[0], "trusted external: [Mo] Theorem 1");
    const auto& l = *w.factors[0].field;
    EXPECT_EQ(l.ramification().kind, ExtClass::InseparableResidue);
    EXPECT_EQ(c.degree * c.degree, c.residue_degree * c.ramification);
}

TEST(BuildWMu, DegreeFour) {
    FieldPtr k = parse_field("gauss(eis(padic(2), X^2-2); x, y, z, w)");
    auto [w, c] = build_w_mu(k, {el(k, "x"), el(k, "y")}, {el(k, "z"), el(k, "w")}, 2);
    EXPECT_EQ(w.degree, 4);
    EXPECT_EQ(c.exponent, 2);
    EXPECT_EQ(c.residue_degree, 16);
}

TEST(BuildWMu, Preconditions) {
    FieldPtr k = parse_field("gauss(eis(padic(2), X^2-2); x, y)");
    EXPECT_EQ(kind_of([&] { build_w_mu(k, {el(k, "x")}, {el(k, "x")}, 1); }), ErrorKind::PreconditionViolated);
    // v(2) = 1 is not in 2 v(Q2)
    FieldPtr g = parse_field("gauss(padic(2); x, y)");
    EXPECT_EQ(kind_of([&] { build_w_mu(g, {el(g, "x")}, {el(g, "y")}, 1); }), ErrorKind::PreconditionViolated);
    FieldPtr l = parse_field("laurent(ratfun(2;x,y))");
    EXPECT_EQ(kind_of([&] { build_w_mu(l, {el(l, "x")}, {el(l, "y")}, 1); }), ErrorKind::PreconditionViolated);
}

TEST(Properties, CertifiedAlgebrasAreDefectless) {
    FieldPtr k = parse_field("laurent(ratfun(2;x,y))");
    std::mt19937 rng(5);
    int certified = 0;
    for (int i = 0; i < 12; ++i) {
        // t^-1 and m t^-3 with m a fourth power stay totally ramified
        std::string m = std::vector<std::string>{"1", "x^4", "y^4", "x^4 + y^4"}[rng() % 4];
        std::string a = std::vector<std::string>{"x", "y", "x + y", "x*y", "x^2", "1"}[rng() % 6];
        std::string b = std::vector<std::string>{"x", "y", "x + y^2", "x*y"}[rng() % 4];
        DivisionCertificate c = assess_division(tensor(as_factors(k, {"t^-1", "(" + m + ")*t^-3"}, {a, b})));
        if (!c.division) continue;
        ++certified;
        EXPECT_EQ(c.degree * c.degree, c.residue_degree * c.ramification);
        EXPECT_TRUE(c.tower->totally_ramified);
    }
    EXPECT_GT(certified, 0);
}
