#include "hdvlab/errors.hpp"
#include "hdvlab/residue/residue_ops.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hdv;

namespace {

ResidueElement random_poly(const ResidueFieldPtr& K, std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint64_t> coef(0, K->fq()->order() - 1);
    ResidueElement out = K->zero();
    for (int i = 0; i < terms; ++i) {
        ResidueElement m = K->from_fq(static_cast<FiniteField::Elem>(coef(rng)));
        for (int v = 0; v < K->nvars(); ++v) m = m * K->variable(v).pow(deg(rng));
        out += m;
    }
    return out;
}

ResidueElement random_nonzero(const ResidueFieldPtr& K, std::mt19937& rng, int max_deg, int terms) {
    for (;;) {
        ResidueElement n = random_poly(K, rng, max_deg, terms);
        ResidueElement d = random_poly(K, rng, max_deg, 2);
        if (!n.is_zero() && !d.is_zero()) return n / d;
    }
}

// Rank of the Jacobian of fs over K, computed independently of the p-basis code.
std::size_t jacobian_rank(const std::vector<ResidueElement>& fs) {
    const auto& K = fs[0].field();
    std::vector<std::vector<ResidueElement>> rows;
    for (const auto& f : fs) {
        std::vector<ResidueElement> row;
        for (int j = 0; j < K->nvars(); ++j) {
            // d(N/D) = (N'D - ND') / D^2
            MPoly n = f.num().derivative(j) * f.den() - f.num() * f.den().derivative(j);
            row.push_back(K->fraction(n, f.den() * f.den()));
        }
        rows.push_back(row);
    }
    std::size_t rank = 0;
    const std::size_t ncols = static_cast<std::size_t>(K->nvars());
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            ResidueElement f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST(FiniteField, FieldAxiomsF9) {
    FiniteField F(3, 2);
    EXPECT_EQ(F.order(), 9u);
    for (FiniteField::Elem a = 1; a < 9; ++a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        EXPECT_EQ(F.frobenius(F.pth_root(a)), a);
        EXPECT_EQ(F.pow(a, 8), 1u);
    }
}

TEST(FiniteField, RejectsCompositeCharacteristic) {
    EXPECT_THROW(FiniteField(4, 1), Error);
}

TEST(MPoly, GcdRecoversCommonFactor) {
    auto K = ResidueField::rational_functions(2, 1, {"x", "y"});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly a = random_poly(K, rng, 3, 3).num();
        MPoly b = random_poly(K, rng, 3, 3).num();
        MPoly c = random_poly(K, rng, 2, 2).num();
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        MPoly g = gcd(a * c, b * c);
        EXPECT_TRUE(divides(c, g));
        EXPECT_TRUE(divides(g, a * c));
        EXPECT_TRUE(divides(g, b * c));
        MPoly rest = gcd(exact_div(a * c, g), exact_div(b * c, g));
        EXPECT_TRUE(rest.is_constant());
    }
}

TEST(ResidueElement, CanonicalFormIsUnique) {
    auto K = ResidueField::rational_functions(3, 1, {"x"});
    auto x = K->variable(0);
    auto one = K->one();
    auto lhs = (x * x - one) / (x - one);
    EXPECT_EQ(lhs, x + one);
    EXPECT_EQ((x / (x + x)).str(), "2");
}

TEST(ResidueElement, ParsesDescriptors) {
    EXPECT_EQ(ResidueField::parse("ratfun(2;x,y)")->descriptor(), "RatFun(2,1;x,y)");
    EXPECT_EQ(ResidueField::parse("Fq(3,2)")->descriptor(), "Fq(3,2)");
    EXPECT_THROW(ResidueField::parse("Fq(6)"), Error);
    EXPECT_THROW(ResidueField::parse("junk"), Error);
}

TEST(PthPowerRoot, Examples) {
    auto K = ResidueField::rational_functions(2, 1, {"x"});
    auto x = K->variable(0);
    EXPECT_EQ(*pth_power_root(K->one()), K->one());
    EXPECT_EQ(*pth_power_root(x * x), x);
    EXPECT_FALSE(pth_power_root(x).has_value());
}

TEST(PthPowerRoot, FrobeniusImageProperty) {
    for (unsigned p : {2u, 3u, 5u}) {
        auto K = ResidueField::rational_functions(p, p == 2 ? 2 : 1, {"x", "y"});
        std::mt19937 rng(p);
        for (int trial = 0; trial < 30; ++trial) {
            auto f = random_nonzero(K, rng, 3, 3);
            auto fp = f.pow(p);
            auto r = pth_power_root(fp);
            ASSERT_TRUE(r.has_value());
            EXPECT_EQ(r->pow(p), fp);
        }
    }
}

TEST(PthPowerRoot, FiniteFieldsArePerfect) {
    auto K = ResidueField::finite(3, 2);
    for (const auto& a : K->all_elements()) EXPECT_EQ(pth_power_root(a)->pow(3), a);
}

TEST(PIndependent, Examples) {
    auto K2 = ResidueField::rational_functions(2, 1, {"x", "y"});
    auto x = K2->variable(0), y = K2->variable(1);
    EXPECT_TRUE(p_independent({x, y}));
    EXPECT_TRUE(p_independent({}));
    auto K1 = ResidueField::rational_functions(2, 1, {"x"});
    auto u = K1->variable(0);
    EXPECT_FALSE(p_independent({u, u.pow(3)}));
    auto F = ResidueField::finite(2, 3);
    EXPECT_FALSE(p_independent({F->from_fq(3)}));
}

TEST(PIndependent, FullVariableListAndDegree) {
    auto K = ResidueField::rational_functions(3, 1, {"x", "y", "z"});
    EXPECT_TRUE(p_independent({K->variable(0), K->variable(1), K->variable(2)}));
    EXPECT_EQ(pth_power_degree(*K), 27u);
}

TEST(PIndependent, AgreesWithJacobianCriterion) {
    for (unsigned p : {2u, 3u}) {
        auto K = ResidueField::rational_functions(p, 1, {"x", "y", "z"});
        std::mt19937 rng(100 + p);
        int positives = 0, negatives = 0;
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> len(1, p == 2 ? 3 : 2);
            std::vector<ResidueElement> fs;
            int m = len(rng);
            for (int i = 0; i < m; ++i) fs.push_back(random_nonzero(K, rng, 2, 2));
            if (trial % 3 == 0 && m >= 2) fs[m - 1] = fs[0] * fs[0] * random_nonzero(K, rng, 1, 1).pow(p);
            bool expected = jacobian_rank(fs) == fs.size();
            EXPECT_EQ(p_independent(fs), expected);
            (expected ? positives : negatives)++;
        }
        EXPECT_GT(positives, 0);
        EXPECT_GT(negatives, 0);
    }
}

TEST(PIndependent, Monotone) {
    auto K = ResidueField::rational_functions(2, 1, {"x", "y", "z"});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ResidueElement> fs;
        for (int i = 0; i < 3; ++i) fs.push_back(random_nonzero(K, rng, 3, 2));
        if (!p_independent(fs)) continue;
        for (std::size_t drop = 0; drop < fs.size(); ++drop) {
            auto sub = fs;
            sub.erase(sub.begin() + static_cast<long>(drop));
            EXPECT_TRUE(p_independent(sub));
        }
    }
}

TEST(FLinearIndependent, Examples) {
    auto K2 = ResidueField::rational_functions(2, 1, {"x"});
    auto x = K2->variable(0);
    EXPECT_TRUE(f_linear_independent({K2->one(), x}));
    EXPECT_FALSE(f_linear_independent({K2->one(), K2->one()}));
    auto K3 = ResidueField::rational_functions(3, 1, {"x"});
    auto x3 = K3->variable(0);
    EXPECT_FALSE(f_linear_independent({x3, x3 + x3}));
}

TEST(FLinearIndependent, AgreesWithBruteForce) {
    for (unsigned p : {2u, 3u}) {
        auto K = ResidueField::rational_functions(p, 1, {"x"});
        std::mt19937 rng(11 * p);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<int> len(1, 4);
            std::vector<ResidueElement> fs;
            int m = len(rng);
            for (int i = 0; i < m; ++i) fs.push_back(random_poly(K, rng, 2, 2) / K->variable(0).pow(trial % 2));
            if (trial % 4 == 0 && m >= 2) fs[m - 1] = fs[0] + fs[0];
            std::size_t total = 1;
            for (int i = 0; i < m; ++i) total *= p;
            bool dependent = false;
            for (std::size_t code = 1; code < total && !dependent; ++code) {
                ResidueElement acc = K->zero();
                std::size_t c = code;
                for (int i = 0; i < m; ++i) {
                    acc += fs[i].scale_int(static_cast<long long>(c % p));
                    c /= p;
                }
                dependent = acc.is_zero();
            }
            EXPECT_EQ(f_linear_independent(fs), !dependent);
        }
    }
}

TEST(IrreducibleArtinSchreierLike, FiniteFieldExamples) {
    auto F2 = ResidueField::finite(2);
    EXPECT_TRUE(irreducible_artinschreier_like(F2->one(), F2->one()));
    EXPECT_FALSE(irreducible_artinschreier_like(F2->zero(), F2->one()));
    auto F3 = ResidueField::finite(3);
    EXPECT_FALSE(irreducible_artinschreier_like(F3->one(), F3->zero()));
}

TEST(IrreducibleArtinSchreierLike, AgreesWithExhaustiveRootsOverFiniteFields) {
    for (auto [p, d] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
        auto K = ResidueField::finite(p, d);
        auto elems = K->all_elements();
        for (const auto& a : elems)
            for (const auto& b : elems) {
                std::vector<ResidueElement> coeffs(p + 1, K->zero());
                coeffs[0] = -a;
                coeffs[1] = b;
                coeffs[p] = K->one();
                bool has_root = !roots_in_field(coeffs)->empty();
                bool irreducible = irreducible_artinschreier_like(a, b);
                if (p <= 3) {
                    EXPECT_EQ(irreducible, !has_root);
                } else if (has_root) {
                    EXPECT_FALSE(irreducible);
                }
            }
    }
}

TEST(IrreducibleArtinSchreierLike, PrimeDegreeCountsOverF5) {
    // The number of monic irreducible quintics over F_5 of the shape
    // X^5 + bX - a equals 4 (b = 0 gives none; X^5 - X - a for a != 0 gives 4).
    auto K = ResidueField::finite(5);
    int count_b_minus_one = 0;
    for (const auto& a : K->all_elements())
        if (irreducible_artinschreier_like(a, K->from_int(-1))) ++count_b_minus_one;
    EXPECT_EQ(count_b_minus_one, 4);
    for (const auto& a : K->all_elements()) EXPECT_FALSE(irreducible_artinschreier_like(a, K->zero()));
}

TEST(IrreducibleArtinSchreierLike, RationalFunctionFields) {
    auto K = ResidueField::rational_functions(2, 1, {"x"});
    auto x = K->variable(0);
    EXPECT_TRUE(irreducible_artinschreier_like(x, K->one()));
    EXPECT_FALSE(irreducible_artinschreier_like(x * x + x, K->one()));
    EXPECT_TRUE(irreducible_artinschreier_like(x, K->zero()));
    auto root = additive_root(x * x + x + K->one() / x + K->one() / (x * x), K->one());
    ASSERT_TRUE(root.has_value());
    EXPECT_EQ(root->pow(2) + *root, x * x + x + K->one() / x + K->one() / (x * x));
    auto K5 = ResidueField::rational_functions(5, 1, {"x"});
    EXPECT_THROW(irreducible_artinschreier_like(K5->variable(0), K5->one()), Error);
}

TEST(IrreducibleArtinSchreierLike, RootsOverRationalFunctionsCheckOut) {
    auto K = ResidueField::rational_functions(3, 1, {"x", "y"});
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto r = random_nonzero(K, rng, 2, 2);
        auto b = random_nonzero(K, rng, 2, 2);
        auto a = r.pow(3) + b * r;
        auto found = additive_root(a, b);
        ASSERT_TRUE(found.has_value());
        EXPECT_EQ(found->pow(3) + b * *found, a);
        EXPECT_FALSE(irreducible_artinschreier_like(a, b));
    }
}
