#ifndef HDVLAB_BRAUER_BRAUER_ENGINE_HPP
#define HDVLAB_BRAUER_BRAUER_ENGINE_HPP

#include "hdvlab/extension/extension_lab.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hdv {

/// (L/K, sigma, a) with sigma given by its value on the generator of L.
struct CyclicAlgebra {
    ExtPtr field;
    FieldElement slot;
    std::string action;
    FieldElement sigma_theta;

    FieldPtr base() const { return field->base(); }
    int degree() const { return field->degree(); }
    FieldElement apply(const FieldElement& x) const;
};

/// sigma is found as a second root of the modulus: eps th for X^p - lambda
/// with eps in K, th + 1 for X^p - X - c, the other root of a quadratic, or a
/// Frobenius lift for inertial L over a finite residue field.  Throws
/// NotCyclicDetectable when none applies.
CyclicAlgebra make_cyclic(const ExtPtr& l, const FieldElement& a);

struct TensorAlgebra {
    std::vector<CyclicAlgebra> factors;
    long long degree = 1;
    long long exponent = 1;

    FieldPtr base() const { return factors.front().base(); }
};

/// Factors over one K; exponent p is the claim recorded for p-th degree
/// factors.
TensorAlgebra tensor(std::vector<CyclicAlgebra> factors);

struct DivisionCertificate {
    std::string field;
    std::optional<AbelianTowerReport> tower;
    std::vector<ResidueElement> residues;
    bool p_independent = false;
    std::vector<FactCheck> checks;
    bool division = false;
    long long degree = 1;
    long long exponent = 1;
    long long residue_degree = 1;
    long long ramification = 1;
    std::string residue_algebra;
    std::vector<std::string> provenance;
    bool trusted_external = false;
    std::string failure;
};

/// Runs every check of the residue criterion on D, recomputing the tower of
/// the factors' generators.  Never throws on a failing check.
DivisionCertificate assess_division(const TensorAlgebra& d);
/// assess_division, but a failing check throws CheckFailed ("criterion
/// inapplicable", not a proof that D is not a division algebra).
DivisionCertificate certify_division(const TensorAlgebra& d);

struct NormSample {
    int trials = 0;
    int hits = 0;
    /// Smallest v(N(d) - a) over the misses; +inf when there are none.
    Value min_gap = Value::infinity();
    std::vector<FieldElement> witnesses;
    std::string label = "falsification evidence, not proof";
};

/// Norms of sampled d in L, against a.  The first samples run through the
/// coordinate vectors with entries 0 and 1, the rest are random small lifts
/// times uniformizer^k, k in {-1, 0, 1}.
NormSample norm_witness_sample(const ExtensionField& l, const FieldElement& a, int trials, std::uint64_t seed = 1);

/// W_mu = tensor of (C_j/K, tau_j, b_j), C_j the residue-root extension of
/// c_j.  Division rests on a cited external theorem and is recorded as such.
std::pair<TensorAlgebra, DivisionCertificate> build_w_mu(const FieldPtr& k, const std::vector<FieldElement>& cs,
                                                         const std::vector<FieldElement>& bs, int mu);

}  // namespace hdv

#endif  // HDVLAB_BRAUER_BRAUER_ENGINE_HPP
