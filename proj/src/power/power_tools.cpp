#include "hdvlab/power/power_tools.hpp"

#include "hdvlab/normality/normality.hpp"
#include "hdvlab/residue/residue_ops.hpp"

namespace hdv {

namespace {

using Outcome = PthPowerVerdict::Outcome;

PthPowerVerdict yes(FieldElement root, std::string note = {}) {
    return {Outcome::IsPthPower, std::move(root), std::move(note)};
}

PthPowerVerdict yes_unrooted() { return {Outcome::IsPthPower, std::nullopt, "decided without extracting the root"}; }

PthPowerVerdict no(std::string note) { return {Outcome::NotPthPower, std::nullopt, std::move(note)}; }

}  // namespace

long long relative_precision(const ValuedField& k) {
    FieldElement pi = k.uniformizer(), pw = pi;
    const long long cap = 4LL * k.precision() * floor_of(k.v_of_p().rational()) + 8;
    for (long long b = 1; b < cap; ++b, pw = pw * pi)
        if (((k.one() + pw) - k.one()).is_zero()) return b;
    return cap;
}

bool agrees_to_precision(const FieldElement& x, const FieldElement& y) {
    FieldElement d = x - x.field()->coerce(y);
    if (d.is_zero()) return true;
    ValInfo vx = x.val_info();
    if (!vx.exact) return false;
    return d.val() >= vx.lower + Value(Rational(relative_precision(*x.field())));
}

namespace {

/// Series data in the Frobenius image.
PthPowerVerdict frobenius_root(const FieldElement& beta) {
    const ValuedField& k = *beta.field();
    const long p = k.p();
    if (k.kind() == ValuedField::Kind::Extension || k.kind() == ValuedField::Kind::Eisenstein) {
        const auto* ext = as_extension(k);
        require(ext->in_base(beta), ErrorKind::UnsupportedField,
                "p-th roots in characteristic p only for elements of the base of " + k.descriptor());
        PthPowerVerdict r = frobenius_root(ext->coords(beta)[0]);
        if (r.root) r.root = k.coerce(*r.root);
        return r;
    }
    require(k.kind() == ValuedField::Kind::Laurent, ErrorKind::UnsupportedField,
            "Frobenius test needs a Laurent series model, got " + k.descriptor());
    const auto& s = beta.as<SeriesRep>();
    SeriesRep out;
    for (const auto& term : s.terms) {
        if (term.e % p != 0) return no("exponent " + std::to_string(term.e) + " of t is prime to p");
        auto r = pth_power_root(term.c);
        if (!r) return no("coefficient " + term.c.str() + " of t^" + std::to_string(term.e) + " is not a p-th power");
        out.terms.push_back({term.e / p, *r});
    }
    out.abs = s.abs == kExact ? kExact : -floor_of(Rational(-s.abs, p));
    return yes(FieldElement(beta.field(), out));
}

}  // namespace

std::string outcome_name(PthPowerVerdict::Outcome o) {
    switch (o) {
        case Outcome::IsPthPower: return "IsPthPower";
        case Outcome::NotPthPower: return "NotPthPower";
        case Outcome::Undecided: return "Undecided";
    }
    return "?";
}

Rational gamma_prime(const ValuedField& k) {
    const long long p = k.p();
    return k.v_of_p().rational() * Rational(p, p - 1);
}

bool in_nabla(const FieldElement& alpha, const Rational& gamma) {
    if (alpha.identical(alpha.field()->one())) return true;
    return val_greater(alpha - 1, gamma);
}

namespace {

PthPowerVerdict near_one(const FieldElement& beta, const CyclotomicContext& ctx, bool with_root) {
    const ValuedField& k = *beta.field();
    const unsigned p = k.p();
    require(k.characteristic() == 0, ErrorKind::WrongCharacteristic, "g_beta lives in characteristic 0");
    require(ctx.field->contains(k), ErrorKind::DomainError, "pth_root: element outside K(eps)");
    ValInfo vi = (beta - 1).val_info();
    const Rational gp = gamma_prime(k);
    require(vi.lower >= Value(gp), ErrorKind::PreconditionViolated,
            "pth_root_near_one: v(beta - 1) = " + vi.lower.str() + " below " + to_string(gp));
    FieldElement lam = beta;
    FieldElement y = k.one();
    if (vi.exact && !vi.lower.is_infinite() && vi.lower == Value(gp)) {
        // boundary: with pi1^(p-1) ~ p, ((pi1 X + 1)^p - beta) / pi1^p reduces
        // to X^p + bX - a with b a unit; a residue root moves beta inside
        FieldElement pi1 = k.uniformizer().pow(gp.numerator() / p);
        FieldElement h0 = (1 - beta) * pi1.pow(-static_cast<long long>(p));
        FieldElement h1 = k.from_int(p) * pi1.pow(1 - static_cast<long long>(p));
        auto root = additive_root(-h0.residue(), h1.residue());
        if (!root) return no("X^p + bX - a has no root in the residue field");
        if (!with_root) return yes_unrooted();
        y = pi1 * k.lift(*root) + 1;
        lam = beta / y.pow(p);
        vi = (lam - 1).val_info();
        require(vi.lower > Value(gp), ErrorKind::CheckFailed, "pth_root: boundary correction did not improve");
    }
    FieldElement r = y;
    if (vi.exact && !vi.lower.is_infinite()) {
        // (1 + m)^(1/p) = sum binom(1/p, j) m^j; the j-th term has value at
        // least j (v(m) - gamma') + v(p)/(p - 1)
        const Rational delta = vi.lower.rational() - gp;
        const Rational target = Rational(relative_precision(k)) + 2;
        const long long terms = floor_of(target / delta) + 2;
        std::vector<mpq_class> c{mpq_class(1)};
        for (long long j = 1; j <= terms; ++j) c.push_back(c.back() * (mpq_class(1, p) - mpq_class(static_cast<long>(j - 1))) / mpq_class(static_cast<long>(j)));
        auto coef = [&](const mpq_class& q) { return k.from_mpz(q.get_num()) / k.from_mpz(q.get_den()); };
        FieldElement m = lam - 1;
        FieldElement acc = coef(c.back());
        for (long long j = terms - 1; j >= 0; --j) acc = coef(c[static_cast<std::size_t>(j)]) + m * acc;
        r = y * acc;
    }
    require(agrees_to_precision(r.pow(p), beta), ErrorKind::CheckFailed,
            "pth_root: root^p differs from the input at value " + (r.pow(p) - beta).val_info().lower.str());
    return yes(r, "binomial series inside nabla_gamma'");
}

}  // namespace

PthPowerVerdict pth_root_near_one(const FieldElement& beta, const CyclotomicContext& ctx) {
    return near_one(beta, ctx, true);
}

namespace {

PthPowerVerdict decide(const FieldElement& beta, const CyclotomicContext& ctx, bool with_root) {
    const ValuedField& k = *beta.field();
    const long long p = k.p();
    try {
        ValInfo vi = beta.val_info();
        require(vi.exact && !vi.lower.is_infinite(), ErrorKind::DomainError, "pth_root of zero");
        if (k.characteristic() == p) return frobenius_root(beta);
        require(ctx.field->contains(k), ErrorKind::DomainError, "pth_root: element outside K(eps)");
        const Rational& v = vi.lower.rational();
        if (!is_integer(v) || v.numerator() % p != 0) return no("value " + to_string(v) + " not in p v(K)");
        FieldElement shift = k.uniformizer().pow(v.numerator() / p);
        FieldElement u = beta / shift.pow(p);
        auto rb = pth_power_root(u.residue());
        if (!rb) return no("residue " + u.residue().str() + " is not a p-th power");
        FieldElement r0 = k.lift(*rb);
        FieldElement lam = u / r0.pow(p);
        FieldElement unit = shift * r0;
        if ((lam - 1).val_info().lower >= Value(gamma_prime(k))) {
            if (!with_root && (lam - 1).val_info().lower > Value(gamma_prime(k))) return yes_unrooted();
            PthPowerVerdict r = near_one(lam, ctx, with_root);
            if (r.root) r.root = *r.root * unit;
            return r;
        }
        NormalizeResult nr = normalize(lam, with_root);
        if (nr.in_kp && !with_root) return yes_unrooted();
        if (nr.in_kp) return yes(nr.value * unit, "normalization reached the p-th power region");
        return no("coset representative is " + verdict_name(nr.last.verdict) + " with v(lambda - 1) = " +
                  nr.last.v_pi.str());
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::InsufficientPrecision) throw;
        return {Outcome::Undecided, std::nullopt, err.what()};
    }
}

}  // namespace

PthPowerVerdict pth_root(const FieldElement& beta, const CyclotomicContext& ctx) { return decide(beta, ctx, true); }

bool is_pth_power(const FieldElement& beta, const CyclotomicContext& ctx) {
    PthPowerVerdict r = decide(beta, ctx, false);
    if (r.outcome == Outcome::Undecided) fail(ErrorKind::InsufficientPrecision, r.note);
    return r.is_pth_power();
}

bool same_coset(const FieldElement& b1, const FieldElement& b2, const CyclotomicContext& ctx) {
    const ValuedField& k = *b1.field();
    FieldElement c2 = k.coerce(b2);
    if (k.characteristic() == 0 && (b1 - c2).val_info().lower > Value(gamma_prime(k))) return true;
    return is_pth_power(b1 / c2, ctx);
}

int kummer_rank(const std::vector<FieldElement>& lambdas, const CyclotomicContext& ctx) {
    require(lambdas.size() <= 6, ErrorKind::DomainError, "kummer_rank: at most 6 elements");
    if (lambdas.empty()) return 0;
    const unsigned p = lambdas[0].field()->p();
    const FieldPtr& f = lambdas[0].field();
    std::vector<FieldElement> ls;
    for (const auto& l : lambdas) ls.push_back(f->coerce(l));
    std::size_t total = 1;
    for (std::size_t i = 0; i < ls.size(); ++i) total *= p;
    std::size_t kernel = 1;
    for (std::size_t code = 1; code < total; ++code) {
        FieldElement prod = f->one();
        std::size_t c = code;
        for (const auto& l : ls) {
            if (c % p) prod = prod * l.pow(static_cast<long long>(c % p));
            c /= p;
        }
        if (is_pth_power(prod, ctx)) ++kernel;
    }
    int dim = 0;
    std::size_t q = 1;
    while (q < kernel) {
        q *= p;
        ++dim;
    }
    require(q == kernel, ErrorKind::CheckFailed, "kummer_rank: kernel size is not a power of p");
    return static_cast<int>(ls.size()) - dim;
}

FieldElement albert_defect(const FieldElement& lambda, const CyclotomicContext& ctx) {
    FieldElement x = ctx.field->coerce(lambda);
    return ctx.phi(x) * x.pow(-static_cast<long long>(ctx.s));
}

bool albert_member(const FieldElement& lambda, const CyclotomicContext& ctx) {
    FieldElement x = ctx.field->coerce(lambda);
    if (is_pth_power(x, ctx)) return false;
    return is_pth_power(albert_defect(x, ctx), ctx);
}

FieldElement albert_average(const FieldElement& lambda, const CyclotomicContext& ctx) {
    FieldElement x = ctx.field->coerce(lambda);
    FieldElement out = ctx.field->one();
    long long lj = 1;
    for (int j = 0; j < ctx.m; ++j, lj *= ctx.l) out = out * ctx.phi_power(x, j).pow(lj);
    require(is_pth_power(albert_defect(out, ctx), ctx), ErrorKind::CheckFailed,
            "albert_average: phi(bar lambda) bar lambda^-s is not a p-th power");
    return out;
}

}  // namespace hdv
