#include "hdvlab/core/field.hpp"

#include <sstream>

namespace hdv {

namespace {

class PadicField final : public ValuedField {
   public:
    PadicField(unsigned p, int precision)
        : ValuedField(p, 0, precision, nullptr), pz_(p), k_(ResidueField::finite(p, 1)) {
        require(precision >= 2, ErrorKind::DomainError, "precision must be at least 2");
    }

    Kind kind() const override { return Kind::Padic; }
    ResidueFieldPtr residue_field() const override { return k_; }
    Value v_of_p() const override { return Value(1); }
    std::string descriptor() const override { return "padic(" + std::to_string(p()) + ")"; }
    FieldElement uniformizer() const override { return from_int(p()); }

    FieldElement lift(const ResidueElement& r) const override {
        require(same_field(r.field(), k_), ErrorKind::DomainError, "residue of another field");
        return from_int(r.constant_value());
    }

    FieldElement from_int(long long n) const override { return from_mpz(mpz_class(std::to_string(n))); }

    FieldElement from_mpz(const mpz_class& n) const override {
        if (n == 0) return make(PadicRep{});
        return make(normalize(n, 0, kExact));
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<PadicRep>();
        const auto& y = b.as<PadicRep>();
        if (x.unit == 0 && x.abs == kExact) return b;
        if (y.unit == 0 && y.abs == kExact) return a;
        long abs = std::min(x.abs, y.abs);
        if (x.unit == 0 && y.unit == 0) return make(PadicRep{0, 0, abs});
        if (x.unit == 0) return make(normalize(y.unit, y.val, abs));
        if (y.unit == 0) return make(normalize(x.unit, x.val, abs));
        long s = std::min(x.val, y.val);
        mpz_class m = x.unit * power(x.val - s) + y.unit * power(y.val - s);
        return make(normalize(m, s, abs));
    }

    FieldElement neg(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        if (x.unit == 0) return a;
        return make(normalize(-x.unit, x.val, x.abs));
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<PadicRep>();
        const auto& y = b.as<PadicRep>();
        bool xz = x.unit == 0, yz = y.unit == 0;
        if ((xz && x.abs == kExact) || (yz && y.abs == kExact)) return make(PadicRep{});
        long lx = xz ? x.abs : x.val, ly = yz ? y.abs : y.val;
        long abs = std::min(x.abs + ly, y.abs + lx);
        if (xz || yz) return make(PadicRep{0, 0, abs});
        return make(normalize(x.unit * y.unit, x.val + y.val, abs));
    }

    FieldElement inv(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        require(!(x.unit == 0 && x.abs == kExact), ErrorKind::DomainError, "division by zero");
        require(x.unit != 0, ErrorKind::InsufficientPrecision, "division by an element that vanishes to precision");
        long rel = x.abs - x.val;
        mpz_class mod = power(rel), r;
        mpz_invert(r.get_mpz_t(), x.unit.get_mpz_t(), mod.get_mpz_t());
        return make(PadicRep{r, -x.val, -x.val + rel});
    }

    ValInfo val_info(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        if (x.unit == 0) return x.abs == kExact ? ValInfo{Value::infinity(), true} : ValInfo{Value(x.abs), false};
        return ValInfo{Value(x.val), true};
    }

    ResidueElement residue(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        ValInfo vi = val_info(a);
        require(vi.exact, ErrorKind::InsufficientPrecision, "residue of an element vanishing to precision");
        require(x.unit != 0 && x.val == 0, ErrorKind::NotAUnit, "residue of a non-unit");
        mpz_class r = x.unit % pz_;
        return k_->from_int(r.get_si());
    }

    bool is_exact_zero(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        return x.unit == 0 && x.abs == kExact;
    }

    bool identical(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<PadicRep>();
        const auto& y = b.as<PadicRep>();
        return x.unit == y.unit && x.abs == y.abs && (x.unit == 0 || x.val == y.val);
    }

    std::string str(const FieldElement& a) const override {
        const auto& x = a.as<PadicRep>();
        std::ostringstream os;
        if (x.unit == 0) {
            if (x.abs == kExact) return "0";
            os << "O(" << p() << '^' << x.abs << ')';
            return os.str();
        }
        mpz_class mod = power(x.abs - x.val);
        mpz_class u = x.unit;
        if (2 * u > mod) u -= mod;
        if (x.val >= 0) {
            os << mpz_class(u * power(x.val)).get_str();
        } else {
            os << u.get_str() << '/' << p() << '^' << -x.val;
        }
        os << " + O(" << p() << '^' << x.abs << ')';
        return os.str();
    }

   private:
    mpz_class power(long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), pz_.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }

    // x = m p^shift + O(p^abs).
    PadicRep normalize(const mpz_class& m_in, long shift, long abs) const {
        if (m_in == 0) return PadicRep{0, 0, abs};
        mpz_class m = m_in;
        long k = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz_.get_mpz_t()));
        long val = shift + k;
        if (val >= abs) return PadicRep{0, 0, abs};
        long cap = std::min(abs, val + static_cast<long>(precision()));
        mpz_class mod = power(cap - val);
        mpz_class u = m % mod;
        if (u < 0) u += mod;
        return PadicRep{u, val, cap};
    }

    mpz_class pz_;
    ResidueFieldPtr k_;
};

}  // namespace

FieldPtr make_padic(unsigned p, int precision) {
    require(is_prime(p), ErrorKind::DomainError, "padic(" + std::to_string(p) + "): not prime");
    return std::make_shared<const PadicField>(p, precision);
}

}  // namespace hdv
