#ifndef HDVLAB_RESIDUE_FINITE_FIELD_HPP
#define HDVLAB_RESIDUE_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hdv {

bool is_prime(unsigned long long n);

/// The finite field F_q, q = p^d, stored as F_p[w]/(m(w)) with m the
/// lexicographically smallest monic irreducible polynomial of degree d.
/// Elements are encoded as integers whose base-p digits are the
/// coefficients of 1, w, w^2, ...
class FiniteField {
   public:
    using Elem = std::uint32_t;

    FiniteField(unsigned p, unsigned d = 1);

    unsigned p() const noexcept { return p_; }
    unsigned degree() const noexcept { return d_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem from_int(long long n) const;
    /// w, or 1 when d = 1.
    Elem generator() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }
    /// Unique b with b^p = a (Frobenius is bijective on F_q).
    Elem pth_root(Elem a) const;

    bool in_prime_field(Elem a) const noexcept { return a < p_; }
    std::vector<unsigned> coords(Elem a) const;
    Elem from_coords(std::span<const unsigned> c) const;

    std::string str(Elem a) const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.p_ == b.p_ && a.d_ == b.d_; }

   private:
    unsigned p_;
    unsigned d_;
    std::uint64_t q_;
    std::vector<unsigned> modulus_;  // length d+1, monic
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace hdv

#endif  // HDVLAB_RESIDUE_FINITE_FIELD_HPP
