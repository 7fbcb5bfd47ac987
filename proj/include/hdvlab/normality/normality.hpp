#ifndef HDVLAB_NORMALITY_NORMALITY_HPP
#define HDVLAB_NORMALITY_NORMALITY_HPP

#include "hdvlab/core/field.hpp"

#include <optional>
#include <string>

namespace hdv {

/// Verdict of the trichotomy for lambda in nabla_0(K), pi = lambda - 1.
struct NormalityClass {
    enum class Verdict { InKp, ANormal, BNormal, CNormal, NotNormal };
    Verdict verdict = Verdict::NotNormal;
    FieldElement lambda;
    FieldElement pi;
    Value v_pi;
    /// p v(p) / (p - 1).
    Rational threshold;
    std::optional<FieldElement> root;
    /// pi = pi1^p a (B, C and NotNormal); p = pi1^(p-1) b (C).
    std::optional<FieldElement> pi1;
    std::optional<FieldElement> a;
    std::optional<FieldElement> b;
    /// (1 - pi1 a0)^p and its p-th root 1 - pi1 a0.
    std::optional<FieldElement> improvement;
    std::optional<FieldElement> improvement_root;
    /// CNormal: whether the root field of X^(p-1) + b is K(epsilon);
    /// empty when the comparison could not be decided.
    std::optional<bool> root_field_agrees;

    bool is_normal() const {
        return verdict == Verdict::ANormal || verdict == Verdict::BNormal || verdict == Verdict::CNormal;
    }
};

std::string verdict_name(NormalityClass::Verdict v);

/// with_root = false skips the p-th root extraction in the InKp case.
NormalityClass classify_normal(const FieldElement& lambda, bool with_root = true);

struct NormalizeResult {
    bool in_kp = false;
    /// The p-th root of lambda when in_kp (empty element if not requested),
    /// otherwise a normal element of lambda K^*p.
    FieldElement value;
    NormalityClass last;
    int steps = 0;
};

NormalizeResult normalize(const FieldElement& lambda, bool with_root = true);

}  // namespace hdv

#endif  // HDVLAB_NORMALITY_NORMALITY_HPP
