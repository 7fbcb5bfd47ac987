#include "hdvlab/residue/finite_field.hpp"

#include "hdvlab/errors.hpp"

#include <sstream>

namespace hdv {

bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<unsigned>;

// Remainder of a modulo a monic b over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lc = a.back();
        if (lc != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = static_cast<unsigned>((a[shift + i] + static_cast<unsigned long long>(p - lc) * b[i]) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool divides_monic(const Coeffs& b, const Coeffs& a, unsigned p) {
    Coeffs r = poly_mod(a, b, p);
    for (unsigned c : r)
        if (c != 0) return false;
    return true;
}

Coeffs decode(unsigned long long code, unsigned len, unsigned p) {
    Coeffs c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<unsigned>(code % p);
        code /= p;
    }
    return c;
}

bool irreducible_over_fp(const Coeffs& f, unsigned p) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    for (unsigned k = 1; 2 * k <= d; ++k) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            Coeffs g = decode(code, k, p);
            g.push_back(1);
            if (divides_monic(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned d) : p_(p), d_(d), q_(1) {
    require(is_prime(p), ErrorKind::DomainError, "characteristic " + std::to_string(p) + " is not prime");
    require(d >= 1, ErrorKind::DomainError, "field degree must be >= 1");
    for (unsigned i = 0; i < d; ++i) {
        q_ *= p;
        require(q_ < (1ULL << 31), ErrorKind::UnsupportedField, "finite field too large");
    }
    if (d == 1) {
        modulus_ = {0, 1};
        return;
    }
    for (unsigned long long code = 0; code < q_; ++code) {
        Coeffs f = decode(code, d, p);
        f.push_back(1);
        if (f[0] != 0 && irreducible_over_fp(f, p)) {
            modulus_ = f;
            return;
        }
    }
    fail(ErrorKind::DomainError, "no irreducible polynomial found");
}

FiniteField::Elem FiniteField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::generator() const { return d_ == 1 ? 1 : static_cast<Elem>(p_); }

std::vector<unsigned> FiniteField::coords(Elem a) const { return decode(a, d_, p_); }

FiniteField::Elem FiniteField::from_coords(std::span<const unsigned> c) const {
    std::uint64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + (c[i] % p_);
    return static_cast<Elem>(code);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
    if (d_ == 1) return static_cast<Elem>((a + static_cast<std::uint64_t>(b)) % p_);
    Coeffs x = coords(a), y = coords(b);
    for (unsigned i = 0; i < d_; ++i) x[i] = (x[i] + y[i]) % p_;
    return from_coords(x);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    Coeffs x = coords(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return from_coords(x);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
    if (d_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    Coeffs x = coords(a), y = coords(b);
    Coeffs prod(2 * d_ - 1, 0);
    for (unsigned i = 0; i < d_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j)
            prod[i + j] = static_cast<unsigned>((prod[i + j] + static_cast<unsigned long long>(x[i]) * y[j]) % p_);
    }
    Coeffs r = poly_mod(prod, modulus_, p_);
    r.resize(d_, 0);
    return from_coords(r);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    require(a != 0, ErrorKind::DomainError, "division by zero in F_q");
    return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::pth_root(Elem a) const {
    // Frobenius has order d on F_q, so its inverse is a -> a^(p^(d-1)).
    Elem r = a;
    for (unsigned i = 1; i < d_; ++i) r = frobenius(r);
    return r;
}

std::string FiniteField::str(Elem a) const {
    if (d_ == 1) return std::to_string(a);
    Coeffs c = coords(a);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = d_; i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << '*';
            os << 'w';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace hdv
