#include "hdvlab/core/cyclotomic.hpp"

#include "hdvlab/core/hensel.hpp"

namespace hdv {

namespace {

/// sqrt(u) in K for a unit u with square residue, p odd; nullopt otherwise.
std::optional<FieldElement> unit_sqrt(const FieldElement& u) {
    const ValuedField& k = *u.field();
    ResidueElement r = u.residue();
    require(r.is_constant(), ErrorKind::UnsupportedField, "square test for a non-constant residue");
    const FiniteField& fq = *r.field()->fq();
    FiniteField::Elem c = r.constant_value();
    std::optional<FiniteField::Elem> root;
    for (std::uint64_t z = 0; z < fq.order(); ++z) {
        auto e = static_cast<FiniteField::Elem>(z);
        if (fq.mul(e, e) == c) {
            root = e;
            break;
        }
    }
    if (!root) return std::nullopt;
    Poly f{-u, k.zero(), k.one()};
    return hensel_root(f, k.lift(r.field()->from_fq(*root)));
}

}  // namespace

FieldElement CyclotomicContext::phi(const FieldElement& x) const {
    if (trivial()) return x;
    const auto* ext = as_extension(*field);
    FieldElement y = field->coerce(x);
    const auto& c = ext->coords(y);
    // a + bY -> a + bY^2 = (a - b) - bY
    return ext->from_coeffs({c[0] - c[1], -c[1]});
}

FieldElement CyclotomicContext::phi_power(const FieldElement& x, int j) const {
    FieldElement y = field->coerce(x);
    for (int i = 0; i < ((j % m) + m) % m; ++i) y = phi(y);
    return y;
}

CyclotomicContext make_cyclotomic(const FieldPtr& k) {
    CyclotomicContext ctx;
    ctx.base = k;
    ctx.field = k;
    const unsigned p = k->p();
    if (k->characteristic() == p) {
        ctx.epsilon = k->one();
        return ctx;
    }
    if (p == 2) {
        ctx.epsilon = k->from_int(-1);
        return ctx;
    }
    require(p == 3, ErrorKind::UnsupportedField, "cyclotomic context: only p = 2, 3 in characteristic 0");
    // epsilon in K iff -3 is a square
    Value w = k->v_of_p();
    const Rational& wq = w.rational();
    bool inside = false;
    FieldElement root;
    if (wq.denominator() == 1 && wq.numerator() % 2 == 0) {
        FieldElement u = k->from_int(-3) * k->uniformizer().pow(-wq.numerator());
        auto s = unit_sqrt(u);
        if (s) {
            inside = true;
            root = *s * k->uniformizer().pow(wq.numerator() / 2);
        }
    }
    if (inside) {
        ctx.epsilon = (root - 1) * k->from_int(2).inverse();
        return ctx;
    }
    auto ext = ExtensionField::create(k, Poly{k->one(), k->one(), k->one()}, "ext(" + k->descriptor() + ", Y^2+Y+1)");
    ctx.field = ext;
    ctx.m = 2;
    ctx.s = 2;
    ctx.l = 2;
    ctx.epsilon = ext->generator();
    return ctx;
}

}  // namespace hdv
