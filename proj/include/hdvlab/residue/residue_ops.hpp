#ifndef HDVLAB_RESIDUE_RESIDUE_OPS_HPP
#define HDVLAB_RESIDUE_RESIDUE_OPS_HPP

#include "hdvlab/residue/residue_field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hdv {

/// g with g^p = f, if f is a p-th power.
std::optional<ResidueElement> pth_power_root(const ResidueElement& f);

/// [K : K^p] for K = F_q(x_1..x_k), which is p^k.
std::uint64_t pth_power_degree(const ResidueField& k);

/// Whether [K^p(f_1..f_m) : K^p] = p^m.
bool p_independent(const std::vector<ResidueElement>& fs);

/// Linear independence over the prime field F_p.
bool f_linear_independent(const std::vector<ResidueElement>& fs);

/// Some root of X^p + bX - a in K, if any.  Works for every supported K
/// since Y -> Y^p + bY is F_p-linear.
std::optional<ResidueElement> additive_root(const ResidueElement& a, const ResidueElement& b);

/// Irreducibility of X^p + bX - a over K.
bool irreducible_artinschreier_like(const ResidueElement& a, const ResidueElement& b);

/// Roots in K of a polynomial c_0 + c_1 X + ... (coefficients low to high).
/// Finite K: exhaustive.  Otherwise returns nullopt unless the polynomial
/// has a shape the solver understands (additive, or degree <= 1).
std::optional<std::vector<ResidueElement>> roots_in_field(const std::vector<ResidueElement>& coeffs);

/// Rank over F_p of the given vectors of F_p entries.
std::size_t fp_rank(std::vector<std::vector<unsigned>> rows, unsigned p);

}  // namespace hdv

#endif  // HDVLAB_RESIDUE_RESIDUE_OPS_HPP
