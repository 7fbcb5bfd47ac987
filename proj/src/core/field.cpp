#include "hdvlab/core/field.hpp"

#include <sstream>

namespace hdv {

namespace {

const ValuedField& common_field(const FieldElement& a, const FieldElement& b) {
    require(a.field() && b.field(), ErrorKind::DomainError, "uninitialized field element");
    if (a.field() == b.field() || a.field()->contains(*b.field())) return *a.field();
    if (b.field()->contains(*a.field())) return *b.field();
    fail(ErrorKind::DomainError, "elements of unrelated fields: " + a.field()->descriptor() + " and " +
                                     b.field()->descriptor());
}

}  // namespace

ValInfo FieldElement::val_info() const { return f_->val_info(*this); }

Value FieldElement::val() const {
    ValInfo vi = val_info();
    require(vi.exact, ErrorKind::InsufficientPrecision,
            "element vanishes to working precision (v >= " + vi.lower.str() + ")");
    return vi.lower;
}

bool FieldElement::is_exact_zero() const { return f_->is_exact_zero(*this); }

ResidueElement FieldElement::residue() const { return f_->residue(*this); }

FieldElement FieldElement::operator-() const { return f_->neg(*this); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const ValuedField& k = common_field(a, b);
    return k.add(k.coerce(a), k.coerce(b));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const ValuedField& k = common_field(a, b);
    return k.add(k.coerce(a), k.neg(k.coerce(b)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const ValuedField& k = common_field(a, b);
    return k.mul(k.coerce(a), k.coerce(b));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const ValuedField& k = common_field(a, b);
    return k.mul(k.coerce(a), k.inv(k.coerce(b)));
}

FieldElement operator+(const FieldElement& a, long long n) { return a + a.field()->from_int(n); }
FieldElement operator-(const FieldElement& a, long long n) { return a + a.field()->from_int(-n); }
FieldElement operator*(const FieldElement& a, long long n) { return a * a.field()->from_int(n); }

FieldElement FieldElement::inverse() const { return f_->inv(*this); }

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = f_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool FieldElement::identical(const FieldElement& o) const {
    return f_ == o.f_ && f_->identical(*this, o);
}

std::string FieldElement::str() const { return f_ ? f_->str(*this) : "<null>"; }

FieldElement ValuedField::zero() const { return from_int(0); }

FieldElement ValuedField::from_int(long long n) const {
    require(static_cast<bool>(base_), ErrorKind::DomainError, "from_int not implemented for this model");
    return embed(base_->from_int(n));
}

FieldElement ValuedField::from_mpz(const mpz_class& n) const {
    require(static_cast<bool>(base_), ErrorKind::DomainError, "from_mpz not implemented for this model");
    return embed(base_->from_mpz(n));
}

bool ValuedField::contains(const ValuedField& sub) const {
    return this == &sub || (base_ && base_->contains(sub));
}

FieldElement ValuedField::coerce(const FieldElement& x) const {
    if (x.field().get() == this) return x;
    require(base_ && base_->contains(*x.field()), ErrorKind::DomainError,
            "cannot coerce an element of " + x.field()->descriptor() + " into " + descriptor());
    return embed(base_->coerce(x));
}

FieldElement ValuedField::embed(const FieldElement&) const {
    fail(ErrorKind::DomainError, "field " + descriptor() + " has no base");
}

bool ValuedField::resolve_symbol(const std::string& name, FieldElement& out) const {
    if (name == "p") {
        out = from_int(p_);
        return true;
    }
    if (base_ && base_->resolve_symbol(name, out)) {
        out = coerce(out);
        return true;
    }
    return false;
}

Poly poly_scale(const Poly& f, const FieldElement& c) {
    Poly out;
    out.reserve(f.size());
    for (const auto& a : f) out.push_back(a * c);
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    Poly out = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const ValuedField& k = *a[0].field();
    Poly out(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

Poly poly_derivative(const Poly& f) {
    Poly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long long>(i));
    return out;
}

FieldElement poly_eval(const Poly& f, const FieldElement& x) {
    require(!f.empty(), ErrorKind::DomainError, "evaluating an empty polynomial");
    FieldElement acc = x.field()->coerce(f.back());
    for (std::size_t i = f.size() - 1; i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Poly poly_coerce(const ValuedField& k, const Poly& f) {
    Poly out;
    out.reserve(f.size());
    for (const auto& c : f) out.push_back(k.coerce(c));
    return out;
}

std::string poly_str(const Poly& f, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i].is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << f[i].str() << ')';
        if (i > 0) os << '*' << var;
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

bool val_greater(const FieldElement& x, const Rational& gamma) {
    ValInfo vi = x.val_info();
    if (vi.lower > Value(gamma)) return true;
    require(vi.exact, ErrorKind::InsufficientPrecision,
            "cannot compare v >= " + vi.lower.str() + " with " + to_string(gamma));
    return false;
}

}  // namespace hdv
