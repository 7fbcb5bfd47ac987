#ifndef HDVLAB_CORE_HENSEL_HPP
#define HDVLAB_CORE_HENSEL_HPP

#include "hdvlab/core/extension_field.hpp"

namespace hdv {

/// Newton lift of an approximate root a of f over O_v(K).
/// Requires 2 v(f'(a)) < v(f(a)) (PreconditionViolated otherwise); the root c
/// satisfies v(c - a) = v(f(a)) - v(f'(a)).
FieldElement hensel_root(const Poly& f, const FieldElement& a);

/// K[X]/(G) for a monic lift G of an irreducible separable g over the
/// residue field (degree <= 3).  Coefficients of g are low to high.
ExtPtr lift_inertial(const std::vector<ResidueElement>& g, const FieldPtr& k);

}  // namespace hdv

#endif  // HDVLAB_CORE_HENSEL_HPP
