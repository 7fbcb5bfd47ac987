#ifndef HDVLAB_EXTENSION_EXTENSION_LAB_HPP
#define HDVLAB_EXTENSION_EXTENSION_LAB_HPP

#include "hdvlab/core/cyclotomic.hpp"
#include "hdvlab/normality/normality.hpp"
#include "hdvlab/power/power_tools.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdv {

/// Extensions stacked on top of the first non-extension model; adjoin keeps
/// this at most kMaxTowerHeight.
constexpr int kMaxTowerHeight = 3;
int extension_height(const ValuedField& k);

/// K[X]/(f).  Eisenstein f gives an EisensteinField.  For n <= 3 the
/// ramification analysis runs at once, which throws NotIrreducible on a
/// splitting.
ExtPtr adjoin(const FieldPtr& base, const Poly& f, std::string label = {});
/// K(lambda^(1/p)), i.e. X^p - lambda.
ExtPtr kummer_adjoin(const FieldElement& lambda);

FieldElement norm(const FieldElement& x);
Value ext_val(const FieldElement& x);

struct ExtClassification {
    ExtClass kind = ExtClass::Mixed;
    int degree = 1;
    int e = 1;
    int f = 1;
    bool defectless = true;
    std::string residue;
    FieldElement witness;
    Value witness_value;
    /// InseparableResidue: c with residue field K^(c^(1/p)).
    std::optional<ResidueElement> residue_radicand;
};

ExtClassification classify_ext(const ExtensionField& l);
/// classify_ext for [L:K] = p; throws CheckFailed if e f differs from p.
ExtClassification classify_deg_p_ext(const ExtensionField& l);

/// A subfield Phi of K with the restriction of v given by a uniformizer of
/// Phi; the index |v(K) : omega(Phi)| is v_K(uniformizer).
struct Subfield {
    std::string name;
    FieldElement uniformizer;
};
Subfield rational_subfield(const FieldPtr& k);

struct TransferReport {
    ExtPtr field;
    Subfield phi;
    long long index = 1;
    bool eisenstein_over_k = false;
    ExtClassification cls;
};

/// f Eisenstein relative to omega, read over K.  Throws IndexDivisible when
/// p divides the index and NotEisensteinOverK when f is not Eisenstein for
/// omega; ClassificationMismatch if the result is not TR of degree deg f.
TransferReport eisenstein_transfer(const Poly& f, const FieldPtr& k, const Subfield& phi);

/// Artin-Schreier: whether c = w^p - w for some w in K (Laurent models).
bool in_wp_image(const FieldElement& c);
/// c reduced modulo wp(K) to the form the value criterion reads off: no
/// negative exponent divisible by p with a p-th power coefficient, and
/// constant term without a root of X^p - X - c0.
FieldElement wp_reduce(const FieldElement& c);
ExtPtr artin_schreier_adjoin(const FieldElement& c);
/// Rank over F_p of cs modulo wp(K) (len <= 6).
int artin_schreier_rank(const std::vector<FieldElement>& cs);

struct TowerStep {
    ExtPtr field;
    FieldElement generator;
    ExtClassification cls;
};

struct AbelianTowerReport {
    std::string kind;
    FieldPtr base;
    std::vector<FieldElement> generators;
    int rank = 0;
    long long degree = 1;
    std::vector<TowerStep> steps;
    long long total_e = 1;
    bool totally_ramified = false;
    std::vector<std::string> notes;
};

/// Kummer tower F(lambda_1^(1/p), ...) over F = ctx.field.
AbelianTowerReport kummer_tower(const std::vector<FieldElement>& lambdas, const CyclotomicContext& ctx);
AbelianTowerReport artin_schreier_tower(const std::vector<FieldElement>& cs);

/// The trivial context of a field containing epsilon.
CyclotomicContext context_over(const FieldPtr& f, const CyclotomicContext& ctx);

struct Lemma34Report {
    FieldElement xi;
    FieldElement lambda;
    FieldElement defect;
    FieldElement defect_root;
    PthPowerVerdict::Outcome lambda_power = PthPowerVerdict::Outcome::Undecided;
};

/// 1 + p(1 - eps)/xi; requires 0 < v(xi) < v(p)/(p-1).  Throws CheckFailed
/// if the defect is not a p-th power.
FieldElement lemma_3_4_element(const FieldElement& xi, const CyclotomicContext& ctx);
Lemma34Report lemma_3_4_report(const FieldElement& xi, const CyclotomicContext& ctx);

struct FactCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// v((1 + eps + ... + eps^(n-1))^p - n) >= v(p) and
/// v((1 - eps^n)^p - n (1 - eps)^p) > v((1 - eps)^p) for n prime to p, n <= 2p.
std::vector<FactCheck> cyclotomic_facts(const CyclotomicContext& ctx);

struct Lemma41Report {
    FieldElement pi;
    FieldElement lambda;
    FieldElement lambda_bar;
    NormalityClass cls;
    std::optional<NormalityClass::Verdict> expected;
    ExtPtr extension;
    ExtClassification ext_cls;
    std::vector<FactCheck> facts;
};

/// lambda = 1 + (1 - eps)^p / pi and its average over Gal(K(eps)/K).  Fact
/// failures throw CheckFailed, verdict mismatches ClassificationMismatch.
Lemma41Report lemma_4_1_family(const FieldElement& pi, const CyclotomicContext& ctx);

struct Lemma44Report {
    FieldElement a;
    FieldElement pi1;
    Lemma41Report family;
    ExtPtr extension;
    ResidueElement residue_radicand;
};

/// Degree-p extension with residue field K^(a^(1/p)); char 0, v(p) in p v(K).
Lemma44Report lemma_4_4_extension(const FieldElement& a);

struct DescentCheck {
    int j = 0;
    FieldElement alpha1;
    FieldElement xi1;
    FieldElement lambda1;
    Value xi1_value;
    bool same_coset = false;
};

struct Lemma51Report {
    FieldElement pi;
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> lambdas;
    AbelianTowerReport tower;
    Rational gamma;
    Value eta1_value;
    Value eta1_expected;
    std::vector<DescentCheck> descent;
    std::optional<NormalityClass::Verdict> level1_verdict;
    std::vector<std::string> notes;
};

/// lambda_j = 1 + pi alpha_j^(p^mu) over F = ctx.field.
Lemma51Report lemma_5_1_tower(const FieldElement& pi, const std::vector<FieldElement>& alphas, int mu,
                              const CyclotomicContext& ctx);

struct TheoremFamilyReport {
    FieldElement xi;
    std::vector<FieldElement> betas;
    std::vector<bool> albert;
    Lemma51Report tower;
};

/// beta_j = 1 + p(1 - eps) xi^-1 alpha_j^(p^mu); requires 0 < v(xi) <= v(p)/p,
/// v(xi) not in p v(K) and v(p) in p v(K).
TheoremFamilyReport theorem_family(const FieldElement& xi, const std::vector<FieldElement>& alphas, int mu,
                                   const CyclotomicContext& ctx);

}  // namespace hdv

#endif  // HDVLAB_EXTENSION_EXTENSION_LAB_HPP
