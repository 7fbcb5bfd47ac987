#ifndef HDVLAB_CORE_CYCLOTOMIC_HPP
#define HDVLAB_CORE_CYCLOTOMIC_HPP

#include "hdvlab/core/extension_field.hpp"

namespace hdv {

/// K(epsilon) for a primitive p-th root of unity epsilon, with a generator
/// phi of Gal(K(epsilon)/K) and phi(epsilon) = epsilon^s, s l = 1 mod p.
/// Supported for p in {2, 3} in characteristic 0; trivial (epsilon = 1) in
/// characteristic p.
struct CyclotomicContext {
    FieldPtr base;
    FieldPtr field;
    int m = 1;
    FieldElement epsilon;
    unsigned s = 1;
    unsigned l = 1;

    bool trivial() const { return m == 1; }
    FieldElement phi(const FieldElement& x) const;
    /// phi^j.
    FieldElement phi_power(const FieldElement& x, int j) const;
};

CyclotomicContext make_cyclotomic(const FieldPtr& k);

}  // namespace hdv

#endif  // HDVLAB_CORE_CYCLOTOMIC_HPP
