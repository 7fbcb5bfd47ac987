#include "hdvlab/normality/normality.hpp"

#include "hdvlab/core/cyclotomic.hpp"
#include "hdvlab/power/power_tools.hpp"
#include "hdvlab/residue/residue_ops.hpp"

namespace hdv {

namespace {

using Verdict = NormalityClass::Verdict;

/// Square test in K for p odd; empty when the residue test is out of reach.
std::optional<bool> is_square(const FieldElement& x) {
    const ValuedField& k = *x.field();
    const Rational v = x.val().rational();
    if (!is_integer(v) || v.numerator() % 2 != 0) return false;
    ResidueElement r = (x * k.uniformizer().pow(-v.numerator())).residue();
    if (!r.is_constant()) return std::nullopt;
    const FiniteField& fq = *r.field()->fq();
    FiniteField::Elem c = r.constant_value();
    for (std::uint64_t z = 0; z < fq.order(); ++z) {
        auto e = static_cast<FiniteField::Elem>(z);
        if (fq.mul(e, e) == c) return true;
    }
    return false;
}

/// Whether K(root of X^(p-1) + b) = K(eps).
std::optional<bool> root_field_agrees(const FieldElement& b, const CyclotomicContext& ctx) {
    if (b.field()->p() == 2) return true;
    if (ctx.trivial()) return is_square(-b);
    return is_square(b * 3);
}

}  // namespace

std::string verdict_name(NormalityClass::Verdict v) {
    switch (v) {
        case Verdict::InKp: return "InKp";
        case Verdict::ANormal: return "ANormal";
        case Verdict::BNormal: return "BNormal";
        case Verdict::CNormal: return "CNormal";
        case Verdict::NotNormal: return "NotNormal";
    }
    return "?";
}

NormalityClass classify_normal(const FieldElement& lambda, bool with_root) {
    const FieldPtr& k = lambda.field();
    const long long p = k->p();
    require(k->characteristic() == 0, ErrorKind::WrongCharacteristic, "normality needs characteristic 0");
    NormalityClass c;
    c.lambda = lambda;
    c.pi = lambda - 1;
    c.threshold = gamma_prime(*k);
    ValInfo vi = c.pi.val_info();
    require(vi.lower > Value(0), ErrorKind::NotInNabla0, "v(lambda - 1) = " + vi.lower.str() + " is not positive");
    c.v_pi = vi.lower;
    const Value gp(c.threshold);
    if (!vi.exact || vi.lower > gp) {
        c.verdict = Verdict::InKp;
        if (with_root) c.root = pth_root_near_one(lambda, make_cyclotomic(k)).root;
        return c;
    }
    const long long w = vi.lower.rational().numerator();
    if (w % p != 0) {
        c.verdict = Verdict::ANormal;
        return c;
    }
    c.pi1 = k->uniformizer().pow(w / p);
    c.a = c.pi / c.pi1->pow(p);
    const ResidueElement ahat = c.a->residue();
    if (vi.lower == gp) {
        c.b = k->from_int(p) / c.pi1->pow(p - 1);
        if (irreducible_artinschreier_like(ahat, c.b->residue())) {
            c.verdict = Verdict::CNormal;
            c.root_field_agrees = root_field_agrees(*c.b, make_cyclotomic(k));
            return c;
        }
        c.verdict = Verdict::InKp;
        if (!with_root) return c;
        PthPowerVerdict r = pth_root_near_one(lambda, make_cyclotomic(k));
        require(r.is_pth_power(), ErrorKind::CheckFailed, "reducible X^p + bX - a without a p-th root");
        c.root = r.root;
        return c;
    }
    auto a0 = pth_power_root(ahat);
    if (!a0) {
        c.verdict = Verdict::BNormal;
        return c;
    }
    c.verdict = Verdict::NotNormal;
    c.improvement_root = 1 - *c.pi1 * k->lift(*a0);
    c.improvement = c.improvement_root->pow(p);
    return c;
}

NormalizeResult normalize(const FieldElement& lambda, bool with_root) {
    const ValuedField& k = *lambda.field();
    const int budget = static_cast<int>(floor_of(gamma_prime(k))) + 2;
    NormalizeResult out;
    FieldElement cur = lambda;
    FieldElement w = k.one();
    for (int step = 0; step <= budget; ++step) {
        NormalityClass c = classify_normal(cur, with_root);
        out.steps = step;
        if (c.verdict == Verdict::InKp) {
            out.in_kp = true;
            if (with_root) out.value = *c.root / w;
            out.last = std::move(c);
            return out;
        }
        if (c.is_normal()) {
            out.value = cur;
            out.last = std::move(c);
            return out;
        }
        cur = cur * *c.improvement;
        w = w * *c.improvement_root;
    }
    fail(ErrorKind::IterationBudgetExceeded, "normalize: no normal element after " + std::to_string(budget) + " steps");
}

}  // namespace hdv
