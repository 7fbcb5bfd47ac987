#ifndef HDVLAB_POWER_POWER_TOOLS_HPP
#define HDVLAB_POWER_POWER_TOOLS_HPP

#include "hdvlab/core/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdv {

struct PthPowerVerdict {
    enum class Outcome { IsPthPower, NotPthPower, Undecided };
    Outcome outcome = Outcome::Undecided;
    /// Set when outcome is IsPthPower and a root was asked for; root^p
    /// equals the input to working precision.
    std::optional<FieldElement> root;
    std::string note;

    bool is_pth_power() const { return outcome == Outcome::IsPthPower; }
};

std::string outcome_name(PthPowerVerdict::Outcome o);

/// Smallest B with (1 + pi^B) - 1 zero at working precision.
long long relative_precision(const ValuedField& k);
/// x - y is zero or has value at least v(x) + relative_precision.
bool agrees_to_precision(const FieldElement& x, const FieldElement& y);

/// p v(p) / (p - 1) in the normalized value group of k.
Rational gamma_prime(const ValuedField& k);

/// v(alpha - 1) > gamma.
bool in_nabla(const FieldElement& alpha, const Rational& gamma);

/// Decides whether beta is a p-th power in its own field (K or K(epsilon)).
PthPowerVerdict pth_root(const FieldElement& beta, const CyclotomicContext& ctx);

/// p-th root of beta with v(beta - 1) >= p v(p)/(p - 1), characteristic 0.
/// Inside the threshold the root is the binomial series; on it, a residue
/// root of X^p + bX - a first moves beta inside.
PthPowerVerdict pth_root_near_one(const FieldElement& beta, const CyclotomicContext& ctx);

/// The decision of pth_root without root extraction; throws
/// InsufficientPrecision instead of answering Undecided.
bool is_pth_power(const FieldElement& beta, const CyclotomicContext& ctx);

bool same_coset(const FieldElement& b1, const FieldElement& b2, const CyclotomicContext& ctx);

/// Rank of the subgroup generated by lambdas modulo p-th powers (len <= 6).
int kummer_rank(const std::vector<FieldElement>& lambdas, const CyclotomicContext& ctx);

/// phi(lambda) lambda^-s, the element that has to be a p-th power.
FieldElement albert_defect(const FieldElement& lambda, const CyclotomicContext& ctx);
bool albert_member(const FieldElement& lambda, const CyclotomicContext& ctx);
/// prod_j phi^j(lambda)^(l^j); throws CheckFailed if the result misses the
/// second Albert condition.
FieldElement albert_average(const FieldElement& lambda, const CyclotomicContext& ctx);

}  // namespace hdv

#endif  // HDVLAB_POWER_POWER_TOOLS_HPP
