#include "hdvlab/core/extension_field.hpp"

#include "hdvlab/residue/residue_ops.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hdv {

std::string ext_class_name(ExtClass c) {
    switch (c) {
        case ExtClass::TotallyRamified: return "TotallyRamified";
        case ExtClass::Inertial: return "Inertial";
        case ExtClass::InseparableResidue: return "InseparableResidue";
        case ExtClass::Mixed: return "Mixed";
    }
    return "Mixed";
}

namespace {

using Matrix = std::vector<std::vector<FieldElement>>;

FieldElement det_rec(const Matrix& m, std::size_t row, unsigned mask, std::map<unsigned, FieldElement>& memo,
                     const ValuedField& k) {
    if (row == m.size()) return k.one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    FieldElement acc = k.zero();
    int sign = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[row][j].is_exact_zero()) {
            FieldElement t = m[row][j] * det_rec(m, row + 1, mask & ~(1u << j), memo, k);
            acc = sign > 0 ? acc + t : acc - t;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

/// Residue of an integral element; zero for positive value.
ResidueElement reduce(const FieldElement& c) {
    ValInfo vi = c.val_info();
    const ResidueFieldPtr k = c.field()->residue_field();
    if (!vi.exact) {
        require(vi.lower > Value(0), ErrorKind::InsufficientPrecision, "coefficient not determined at precision");
        return k->zero();
    }
    if (vi.lower > Value(0)) return k->zero();
    require(vi.lower == Value(0), ErrorKind::NotAUnit, "coefficient is not integral");
    return c.residue();
}

std::string pick_generator_name(const FieldPtr& base) {
    FieldElement dummy;
    if (!base->resolve_symbol("th", dummy)) return "th";
    for (int i = 2;; ++i) {
        std::string n = "th" + std::to_string(i);
        if (!base->resolve_symbol(n, dummy)) return n;
    }
}

Value scaled(const Value& v, const Rational& s) {
    if (v.is_infinite()) return v;
    return Value(v.rational() * s);
}

}  // namespace

FieldElement determinant(const Matrix& m) {
    require(!m.empty() && m.size() < 16, ErrorKind::DomainError, "determinant: unsupported size");
    const ValuedField& k = *m[0][0].field();
    if (m.size() == 1) return m[0][0];
    if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    std::map<unsigned, FieldElement> memo;
    return det_rec(m, 0, (1u << m.size()) - 1, memo, k);
}

const ExtensionField* as_extension(const ValuedField& k) { return dynamic_cast<const ExtensionField*>(&k); }

bool is_eisenstein(const Poly& f) {
    if (f.size() < 2) return false;
    const FieldElement& lead = f.back();
    if (!(lead - 1).is_exact_zero() && !(lead - 1).is_zero()) return false;
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        ValInfo vi = f[i].val_info();
        if (!(vi.lower >= Value(1))) {
            require(vi.exact, ErrorKind::InsufficientPrecision, "Eisenstein test: coefficient not determined");
            return false;
        }
    }
    ValInfo v0 = f[0].val_info();
    require(v0.exact || v0.lower > Value(1), ErrorKind::InsufficientPrecision, "Eisenstein test: constant term");
    return v0.exact && v0.lower == Value(1);
}

ExtensionField::ExtensionField(FieldPtr base, Poly f, std::string label)
    : ValuedField(base->p(), base->characteristic(), base->precision(), base), f_(std::move(f)),
      gen_(pick_generator_name(this->base())), label_(std::move(label)) {}

ExtPtr ExtensionField::create(FieldPtr base, Poly f, std::string label) {
    require(static_cast<bool>(base), ErrorKind::DomainError, "extension: missing base");
    require(f.size() >= 2, ErrorKind::DomainError, "extension: modulus must have degree >= 1");
    require(f.size() <= 9, ErrorKind::DomainError, "extension: degree above 8 unsupported");
    f = poly_coerce(*base, f);
    require((f.back() - 1).is_zero(), ErrorKind::DomainError, "extension: modulus must be monic");
    f.back() = base->one();
    if (f.size() > 2) require(!f[0].is_zero(), ErrorKind::NotIrreducible, "extension: modulus divisible by X");
    if (label.empty()) label = "ext(" + base->descriptor() + ", " + poly_str(f) + ")";
    return ExtPtr(new ExtensionField(std::move(base), std::move(f), std::move(label)));
}

ExtPtr EisensteinField::create(FieldPtr base, Poly f, std::string label) {
    require(static_cast<bool>(base), ErrorKind::DomainError, "eis: missing base");
    f = poly_coerce(*base, f);
    require(is_eisenstein(f), ErrorKind::NotEisensteinOverK, "eis: " + poly_str(f) + " is not Eisenstein over " +
                                                                 base->descriptor());
    require(f.size() <= 9, ErrorKind::DomainError, "eis: degree above 8 unsupported");
    f.back() = base->one();
    if (label.empty()) label = "eis(" + base->descriptor() + ", " + poly_str(f) + ")";
    return ExtPtr(new EisensteinField(std::move(base), std::move(f), std::move(label)));
}

FieldElement ExtensionField::generator() const {
    std::vector<FieldElement> c(degree(), base()->zero());
    if (degree() == 1) return make(VecRep{{-f_[0]}});
    c[1] = base()->one();
    return make(VecRep{std::move(c)});
}

FieldElement ExtensionField::from_coeffs(std::vector<FieldElement> c) const {
    require(static_cast<int>(c.size()) <= degree(), ErrorKind::DomainError, "too many coordinates");
    for (auto& x : c) x = base()->coerce(x);
    c.resize(degree(), base()->zero());
    return make(VecRep{std::move(c)});
}

bool ExtensionField::in_base(const FieldElement& x) const {
    const auto& c = coords(x);
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_exact_zero()) return false;
    return true;
}

FieldElement ExtensionField::embed(const FieldElement& b) const {
    std::vector<FieldElement> c(degree(), base()->zero());
    c[0] = b;
    return make(VecRep{std::move(c)});
}

FieldElement ExtensionField::add(const FieldElement& a, const FieldElement& b) const {
    const auto& x = coords(a);
    const auto& y = coords(b);
    std::vector<FieldElement> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] + y[i];
    return make(VecRep{std::move(c)});
}

FieldElement ExtensionField::neg(const FieldElement& a) const {
    std::vector<FieldElement> c = coords(a);
    for (auto& x : c) x = -x;
    return make(VecRep{std::move(c)});
}

FieldElement ExtensionField::mul(const FieldElement& a, const FieldElement& b) const {
    const auto& x = coords(a);
    const auto& y = coords(b);
    const std::size_t n = x.size();
    std::vector<FieldElement> prod(2 * n - 1, base()->zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_exact_zero()) prod[i + j] = prod[i + j] + x[i] * y[j];
    }
    for (std::size_t k = 2 * n - 1; k-- > n;) {
        if (prod[k].is_exact_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!f_[i].is_exact_zero()) prod[k - n + i] = prod[k - n + i] - prod[k] * f_[i];
    }
    prod.resize(n);
    return make(VecRep{std::move(prod)});
}

Matrix ExtensionField::mult_matrix(const FieldElement& x) const {
    const int n = degree();
    Matrix m(n, std::vector<FieldElement>(n));
    FieldElement col = x;
    FieldElement th = generator();
    for (int j = 0; j < n; ++j) {
        const auto& c = coords(col);
        for (int i = 0; i < n; ++i) m[i][j] = c[i];
        if (j + 1 < n) col = mul(col, th);
    }
    return m;
}

FieldElement ExtensionField::inv(const FieldElement& a) const {
    require(!is_exact_zero(a), ErrorKind::DomainError, "division by zero");
    const int n = degree();
    Matrix m = mult_matrix(a);
    FieldElement d = determinant(m);
    require(!d.is_zero(), ErrorKind::InsufficientPrecision, "division by an element that vanishes to precision");
    FieldElement dinv = d.inverse();
    if (n == 1) return make(VecRep{{dinv}});
    std::vector<FieldElement> z(n);
    for (int i = 0; i < n; ++i) {
        Matrix minor;
        for (int r = 1; r < n; ++r) {
            std::vector<FieldElement> row;
            for (int c = 0; c < n; ++c)
                if (c != i) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        FieldElement cof = determinant(minor) * dinv;
        z[i] = (i % 2 == 0) ? cof : -cof;
    }
    return make(VecRep{std::move(z)});
}

FieldElement ExtensionField::norm(const FieldElement& x) const { return determinant(mult_matrix(coerce(x))); }

FieldElement ExtensionField::trace(const FieldElement& x) const {
    Matrix m = mult_matrix(coerce(x));
    FieldElement t = base()->zero();
    for (std::size_t i = 0; i < m.size(); ++i) t = t + m[i][i];
    return t;
}

Poly ExtensionField::charpoly(const FieldElement& x) const {
    Matrix m = mult_matrix(coerce(x));
    const int n = degree();
    Poly out(n + 1, base()->zero());
    out[n] = base()->one();
    if (n == 1) {
        out[0] = -m[0][0];
        return out;
    }
    if (n == 2) {
        out[1] = -(m[0][0] + m[1][1]);
        out[0] = determinant(m);
        return out;
    }
    // coefficient of X^(n-k) is (-1)^k times the sum of principal k-minors
    for (unsigned s = 1; s < (1u << n); ++s) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) idx.push_back(i);
        Matrix sub(idx.size(), std::vector<FieldElement>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m[idx[a]][idx[b]];
        FieldElement d = determinant(sub);
        std::size_t k = idx.size();
        out[n - k] = (k % 2 == 0) ? out[n - k] + d : out[n - k] - d;
    }
    return out;
}

ValInfo ExtensionField::ext_val_info(const FieldElement& x) const {
    ValInfo vi = norm(x).val_info();
    return ValInfo{scaled(vi.lower, Rational(1, degree())), vi.exact};
}

Value ExtensionField::ext_val(const FieldElement& x) const {
    ValInfo vi = ext_val_info(x);
    require(vi.exact, ErrorKind::InsufficientPrecision, "norm vanishes to working precision");
    return vi.lower;
}

const RamificationData& ExtensionField::ramification() const {
    std::call_once(once_, [this] { ram_ = analyse(); });
    return *ram_;
}

RamificationData ExtensionField::analyse() const {
    const int n = degree();
    const unsigned p = this->p();
    RamificationData out;
    if (n == 1) {
        out.kind = ExtClass::Inertial;
        out.witness = one();
        out.witness_value = Value(0);
        return out;
    }
    const FieldElement pi = embed(base()->uniformizer());
    FieldElement y = generator();
    const int budget = 4 * precision() + 8;
    try {
        for (int step = 0; step < budget; ++step) {
            // y stays of the form a + b th, and N(a + b th) = +-b^n f(-a/b)
            ValInfo qi = ext_val_info(y);
            require(qi.exact && !qi.lower.is_infinite(), ErrorKind::NotIrreducible,
                    descriptor() + ": the modulus has a root to working precision");
            Value q = qi.lower;
            long long den = q.rational().denominator();
            if (den == n) {
                out.kind = ExtClass::TotallyRamified;
                out.e = n;
                out.f = 1;
                out.witness = y;
                out.witness_value = q;
                return out;
            }
            if (den > 1) {
                out.kind = ExtClass::Mixed;
                out.e = static_cast<int>(den);
                out.witness = y;
                out.witness_value = q;
                return out;
            }
            long long k = q.rational().numerator();
            FieldElement u = k == 0 ? y : y * pi.pow(-k);
            Poly chi = charpoly(u);
            std::vector<ResidueElement> red;
            for (const auto& c : chi) red.push_back(reduce(c));
            bool middle_zero = true;
            for (int i = 1; i < n; ++i) middle_zero = middle_zero && red[i].is_zero();
            std::optional<ResidueElement> r;
            if (static_cast<unsigned>(n) == p) {
                if (middle_zero) {
                    r = pth_power_root(-red[0]);
                    if (!r) {
                        out.kind = ExtClass::InseparableResidue;
                        out.e = 1;
                        out.f = n;
                        out.witness = u;
                        out.witness_value = Value(0);
                        out.residue_minpoly = red;
                        return out;
                    }
                }
            } else if (n % static_cast<int>(p) != 0) {
                ResidueElement cand = -(red[n - 1] / red[0].field()->from_int(n));
                std::vector<ResidueElement> pure{red[0].field()->one()};
                for (int i = 0; i < n; ++i) {
                    std::vector<ResidueElement> next(pure.size() + 1, red[0].field()->zero());
                    for (std::size_t j = 0; j < pure.size(); ++j) {
                        next[j + 1] += pure[j];
                        next[j] -= cand * pure[j];
                    }
                    pure = next;
                }
                if (pure == red) r = cand;
            }
            if (r) {
                y = u - embed(base()->lift(*r));
                continue;
            }
            if (static_cast<unsigned>(n) != p && n % static_cast<int>(p) == 0) {
                out.kind = ExtClass::Mixed;
                out.witness = u;
                out.residue_minpoly = red;
                return out;
            }
            if (n <= 3) {
                auto roots = roots_in_field(red);
                require(!roots || roots->empty(), ErrorKind::NotIrreducible,
                        "reduced characteristic polynomial has a simple root; the modulus splits");
            } else {
                out.kind = ExtClass::Mixed;
                out.witness = u;
                out.residue_minpoly = red;
                return out;
            }
            out.kind = ExtClass::Inertial;
            out.e = 1;
            out.f = n;
            out.witness = u;
            out.witness_value = Value(0);
            out.residue_minpoly = red;
            return out;
        }
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::InsufficientPrecision)
            fail(ErrorKind::UnclassifiableAtPrecision, descriptor() + ": " + err.what());
        throw;
    }
    fail(ErrorKind::UnclassifiableAtPrecision, descriptor() + ": witness search did not settle");
}

ResidueElement ExtensionField::residue_pth_power(const FieldElement& x) const {
    const RamificationData& rd = ramification();
    require(degree() == static_cast<int>(p()) &&
                (rd.kind == ExtClass::TotallyRamified || rd.kind == ExtClass::InseparableResidue),
            ErrorKind::UnsupportedField, "residue_pth_power needs a degree-p extension without residue separability");
    FieldElement y = coerce(x);
    require(val_info(y).exact && val_info(y).lower == Value(0), ErrorKind::NotAUnit, "residue of a non-unit");
    Poly chi = charpoly(y);
    return -reduce(chi[0]);
}

ResidueFieldPtr ExtensionField::residue_field() const {
    const RamificationData& rd = ramification();
    if (rd.kind == ExtClass::TotallyRamified || degree() == 1) return base()->residue_field();
    ResidueFieldPtr k = base()->residue_field();
    if (rd.kind == ExtClass::Inertial && k->is_finite() && k->fq_degree() == 1)
        return ResidueField::finite(k->characteristic(), static_cast<unsigned>(rd.f));
    fail(ErrorKind::UnsupportedField, descriptor() + ": residue field of class " + ext_class_name(rd.kind) +
                                          " is not modelled");
}

Value ExtensionField::v_of_p() const {
    Value w = base()->v_of_p();
    return scaled(w, Rational(ramification().e));
}

FieldElement ExtensionField::uniformizer() const {
    const RamificationData& rd = ramification();
    if (rd.kind != ExtClass::TotallyRamified) return embed(base()->uniformizer());
    long long a = rd.witness_value.rational().numerator();
    const long long n = degree();
    // s a + z n = 1
    long long s = 0, z = 0;
    for (long long cand = 0; cand < n; ++cand) {
        long long rem = 1 - cand * a;
        if (rem % n == 0) {
            s = cand;
            z = rem / n;
            break;
        }
    }
    return rd.witness.pow(s) * embed(base()->uniformizer()).pow(z);
}

bool ExtensionField::inertial_finite() const {
    const ResidueFieldPtr& k = base()->residue_field();
    return degree() > 1 && ramification().kind == ExtClass::Inertial && k->is_finite() && k->fq_degree() == 1;
}

std::vector<FieldElement> ExtensionField::witness_coords(const FieldElement& x) const {
    const int n = degree();
    const FieldElement& u = ramification().witness;
    std::vector<std::vector<FieldElement>> m(static_cast<std::size_t>(n));
    FieldElement pw = one();
    for (int j = 0; j < n; ++j, pw = pw * u) {
        const auto& c = coords(pw);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)].push_back(c[static_cast<std::size_t>(i)]);
    }
    // Cramer's rule
    const FieldElement d = determinant(m);
    const auto& cx = coords(x);
    std::vector<FieldElement> out;
    for (int j = 0; j < n; ++j) {
        auto mj = m;
        for (int i = 0; i < n; ++i) mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cx[static_cast<std::size_t>(i)];
        out.push_back(determinant(mj) / d);
    }
    return out;
}

FiniteField::Elem ExtensionField::witness_residue() const {
    const auto& red = ramification().residue_minpoly;
    const ResidueFieldPtr rk = residue_field();
    const FiniteField& fq = *rk->fq();
    for (std::uint64_t z = 0; z < fq.order(); ++z) {
        auto w = static_cast<FiniteField::Elem>(z);
        FiniteField::Elem acc = fq.zero();
        for (std::size_t i = red.size(); i-- > 0;) acc = fq.add(fq.mul(acc, w), fq.from_int(red[i].constant_value()));
        if (acc == fq.zero()) return w;
    }
    fail(ErrorKind::NotIrreducible, descriptor() + ": reduced witness polynomial has no root in the residue field");
}

FieldElement ExtensionField::lift(const ResidueElement& r) const {
    if (!inertial_finite()) return embed(base()->lift(r));
    const ResidueFieldPtr rk = residue_field();
    const FiniteField& fq = *rk->fq();
    require(r.field()->is_finite() && r.field()->fq_degree() == fq.degree(), ErrorKind::DomainError,
            "residue of another field");
    const FiniteField::Elem target = r.constant_value(), w = witness_residue();
    const int n = degree();
    const unsigned p = this->p();
    std::uint64_t total = 1;
    for (int j = 0; j < n; ++j) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<unsigned> d;
        FiniteField::Elem acc = fq.zero(), pw = fq.one();
        for (std::uint64_t c = code; d.size() < static_cast<std::size_t>(n); c /= p) {
            d.push_back(static_cast<unsigned>(c % p));
            acc = fq.add(acc, fq.mul(fq.from_int(d.back()), pw));
            pw = fq.mul(pw, w);
        }
        if (acc != target) continue;
        const FieldElement& u = ramification().witness;
        FieldElement out = zero(), upw = one();
        for (int j = 0; j < n; ++j, upw = upw * u) out = out + upw * static_cast<long long>(d[static_cast<std::size_t>(j)]);
        return out;
    }
    fail(ErrorKind::DomainError, descriptor() + ": residue outside the span of the witness powers");
}

ValInfo ExtensionField::val_info(const FieldElement& a) const {
    if (is_exact_zero(a)) return ValInfo{Value::infinity(), true};
    ValInfo vi = ext_val_info(a);
    return ValInfo{scaled(vi.lower, Rational(ramification().e)), vi.exact};
}

ResidueElement ExtensionField::residue(const FieldElement& a) const {
    ValInfo vi = val_info(a);
    require(vi.exact, ErrorKind::InsufficientPrecision, "residue of an element vanishing to precision");
    require(vi.lower == Value(0), ErrorKind::NotAUnit, "residue of a non-unit");
    const RamificationData& rd = ramification();
    if (in_base(a)) {
        ResidueElement r = coords(a)[0].residue();
        if (rd.kind == ExtClass::TotallyRamified || degree() == 1) return r;
        return residue_field()->from_int(r.constant_value());
    }
    if (inertial_finite()) {
        const ResidueFieldPtr rk = residue_field();
    const FiniteField& fq = *rk->fq();
        const FiniteField::Elem w = witness_residue();
        FiniteField::Elem acc = fq.zero(), pw = fq.one();
        for (const auto& c : witness_coords(a)) {
            ValInfo ci = c.val_info();
            require(ci.lower >= Value(0), ErrorKind::CheckFailed, descriptor() + ": witness basis is not integral");
            if (ci.exact && ci.lower == Value(0)) acc = fq.add(acc, fq.mul(fq.from_int(c.residue().constant_value()), pw));
            pw = fq.mul(pw, w);
        }
        return rk->from_fq(acc);
    }
    require(rd.kind == ExtClass::TotallyRamified || degree() == 1, ErrorKind::UnsupportedField,
            descriptor() + ": residues outside the base are modelled only for totally ramified extensions");
    Poly chi = charpoly(a);
    const int n = degree();
    if (n % static_cast<int>(p()) != 0) return -(reduce(chi[n - 1]) / base()->residue_field()->from_int(n));
    require(n == static_cast<int>(p()), ErrorKind::UnsupportedField, "residue in a composite-degree extension");
    auto r = pth_power_root(-reduce(chi[0]));
    require(r.has_value(), ErrorKind::DomainError, "residue of a totally ramified extension outside the base field");
    return *r;
}

bool ExtensionField::is_exact_zero(const FieldElement& a) const {
    for (const auto& c : coords(a))
        if (!c.is_exact_zero()) return false;
    return true;
}

bool ExtensionField::identical(const FieldElement& a, const FieldElement& b) const {
    const auto& x = coords(a);
    const auto& y = coords(b);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].identical(y[i])) return false;
    return true;
}

std::string ExtensionField::str(const FieldElement& a) const {
    const auto& c = coords(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << c[i].str() << ')';
        if (i > 0) os << '*' << gen_;
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

bool ExtensionField::resolve_symbol(const std::string& name, FieldElement& out) const {
    if (name == gen_) {
        out = generator();
        return true;
    }
    return ValuedField::resolve_symbol(name, out);
}

ValInfo EisensteinField::val_info(const FieldElement& a) const {
    const auto& c = coords(a);
    const long n = degree();
    Value exact_min = Value::infinity();
    Value bound_min = Value::infinity();
    for (std::size_t i = 0; i < c.size(); ++i) {
        ValInfo vi = c[i].val_info();
        if (vi.lower.is_infinite()) continue;
        Value w(vi.lower.rational() * Rational(n) + Rational(static_cast<long long>(i)));
        if (vi.exact)
            exact_min = min(exact_min, w);
        else
            bound_min = min(bound_min, w);
    }
    if (exact_min < bound_min) return ValInfo{exact_min, true};
    if (exact_min.is_infinite() && bound_min.is_infinite()) return ValInfo{Value::infinity(), true};
    return ValInfo{min(exact_min, bound_min), false};
}

ResidueElement EisensteinField::residue(const FieldElement& a) const {
    ValInfo vi = val_info(a);
    require(vi.exact, ErrorKind::InsufficientPrecision, "residue of an element vanishing to precision");
    require(vi.lower == Value(0), ErrorKind::NotAUnit, "residue of a non-unit");
    return coords(a)[0].residue();
}

RamificationData EisensteinField::analyse() const {
    RamificationData out;
    out.kind = ExtClass::TotallyRamified;
    out.e = degree();
    out.f = 1;
    out.witness = generator();
    out.witness_value = Value(Rational(1, degree()));
    return out;
}

}  // namespace hdv
