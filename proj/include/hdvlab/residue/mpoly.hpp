#ifndef HDVLAB_RESIDUE_MPOLY_HPP
#define HDVLAB_RESIDUE_MPOLY_HPP

#include "hdvlab/residue/finite_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hdv {

/// Sparse multivariate polynomial over F_q in at most 8 variables.
/// Exponent vectors are packed into one 64-bit key with x_0 in the most
/// significant field, so integer order on keys is lex order (x_0 > x_1 > ...).
/// Terms are kept in strictly decreasing key order.
class MPoly {
   public:
    using Elem = FiniteField::Elem;
    using Key = std::uint64_t;
    using Exps = std::vector<int>;
    struct Term {
        Key key;
        Elem c;
    };

    MPoly() = default;
    MPoly(FiniteFieldPtr f, int nvars);

    static MPoly constant(FiniteFieldPtr f, int nvars, Elem c);
    static MPoly variable(FiniteFieldPtr f, int nvars, int i);
    static MPoly monomial(FiniteFieldPtr f, const Exps& e, Elem c);
    static MPoly from_key(FiniteFieldPtr f, int nvars, Key k, Elem c);

    const FiniteFieldPtr& field() const { return f_; }
    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }

    int exponent(Key k, int var) const;
    Exps exponents(Key k) const;
    Key pack(const Exps& e) const;

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].key == 0); }
    bool is_monomial() const { return t_.size() == 1; }
    Elem constant_value() const;  // requires is_constant()
    const Term& leading() const { return t_.front(); }
    int degree_in(int var) const;
    int total_degree() const;
    Elem coefficient(const Exps& e) const;
    /// Index set of variables that occur.
    std::vector<int> support() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scale(Elem c) const;
    MPoly mul_monomial(Key k, Elem c) const;
    MPoly pow(unsigned e) const;
    MPoly derivative(int var) const;
    /// Scalar multiple with leading coefficient 1 (zero stays zero).
    MPoly monic() const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    /// Total order on polynomials, used for canonical sorting only.
    friend bool operator<(const MPoly& a, const MPoly& b);

    std::string str(const std::vector<std::string>& names) const;

    // Used by the algorithms in mpoly.cpp.
    int bits() const { return bits_; }
    bool key_divides(Key small, Key big) const;
    Key key_add(Key a, Key b) const;
    Key key_sub(Key big, Key small) const { return big - small; }
    static MPoly from_terms(FiniteFieldPtr f, int nvars, std::vector<Term> sorted_terms);

   private:
    FiniteFieldPtr f_;
    int n_ = 0;
    int bits_ = 16;
    Key guard_ = 0;
    std::vector<Term> t_;
};

/// a / b; throws DomainError if b does not divide a.
MPoly exact_div(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);
/// Monic gcd (zero only when both inputs are zero).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace hdv

#endif  // HDVLAB_RESIDUE_MPOLY_HPP
