#ifndef HDVLAB_CORE_PARSE_HPP
#define HDVLAB_CORE_PARSE_HPP

#include "hdvlab/core/field.hpp"

#include <string>

namespace hdv {

/// Field models from descriptors such as `padic(2)`, `laurent(ratfun(2;x,y))`,
/// `eis(padic(2), X^2-2)`, `gauss(eis(padic(2),X^2-2); x)` and
/// `ext(padic(2), X^2-3)`.
FieldPtr parse_field(const std::string& descriptor, int precision = kDefaultPrecision);

/// Arithmetic expression over the symbols the field resolves (t, p, th,
/// residue and Gauss variables): + - * / ^, integers, parentheses.
FieldElement parse_element(const ValuedField& k, const std::string& expr);

/// Polynomial in `var` with coefficients given by expressions over k.
Poly parse_poly(const ValuedField& k, const std::string& expr, const std::string& var = "X");

}  // namespace hdv

#endif  // HDVLAB_CORE_PARSE_HPP
