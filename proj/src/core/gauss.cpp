#include "hdvlab/core/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace hdv {

namespace {

using Terms = std::vector<GaussTerm>;
using Acc = std::map<std::vector<int>, FieldElement, std::greater<>>;

Terms from_acc(Acc& acc) {
    Terms out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) out.push_back(GaussTerm{e, std::move(c)});
    return out;
}

void accumulate(Acc& acc, const std::vector<int>& e, const FieldElement& c) {
    auto it = acc.find(e);
    if (it == acc.end())
        acc.emplace(e, c);
    else
        it->second = it->second + c;
}

Terms padd(const Terms& a, const Terms& b) {
    Acc acc;
    for (const auto& t : a) accumulate(acc, t.e, t.c);
    for (const auto& t : b) accumulate(acc, t.e, t.c);
    return from_acc(acc);
}

Terms pmul(const Terms& a, const Terms& b) {
    if (a.size() == 1 || b.size() == 1) {
        const Terms& m = a.size() == 1 ? a : b;
        const Terms& o = a.size() == 1 ? b : a;
        Terms out;
        out.reserve(o.size());
        for (const auto& t : o) {
            std::vector<int> e = t.e;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[0].e[i];
            out.push_back(GaussTerm{std::move(e), t.c * m[0].c});
        }
        return out;
    }
    Acc acc;
    for (const auto& s : a) {
        for (const auto& t : b) {
            std::vector<int> e = s.e;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.e[i];
            accumulate(acc, e, s.c * t.c);
        }
    }
    return from_acc(acc);
}

Terms pscale(const Terms& a, const FieldElement& c) {
    Terms out = a;
    for (auto& t : out) t.c = t.c * c;
    return out;
}

Terms pmonomial(const Terms& a, const std::vector<int>& e) {
    Terms out = a;
    for (auto& t : out)
        for (std::size_t i = 0; i < e.size(); ++i) t.e[i] += e[i];
    return out;
}

bool terms_identical(const Terms& a, const Terms& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].e != b[i].e || !a[i].c.identical(b[i].c)) return false;
    return true;
}

Value shifted(const Value& v, const Rational& d) { return v.is_infinite() ? v : Value(v.rational() + d); }

class GaussField final : public ValuedField {
   public:
    GaussField(FieldPtr base, std::vector<std::string> vars)
        : ValuedField(base->p(), base->characteristic(), base->precision(), base), vars_(std::move(vars)),
          k_(this->base()->residue_field()->with_extra_vars(vars_)) {}

    Kind kind() const override { return Kind::Gauss; }
    ResidueFieldPtr residue_field() const override { return k_; }
    Value v_of_p() const override { return base()->v_of_p(); }
    std::string descriptor() const override {
        std::string s = "gauss(" + base()->descriptor() + ";";
        for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? ", " : " ") + vars_[i];
        return s + ")";
    }
    FieldElement uniformizer() const override { return embed(base()->uniformizer()); }

    FieldElement embed(const FieldElement& b) const override {
        FracRep r;
        r.den = unit_den();
        ValInfo vi = b.val_info();
        if (!vi.exact)
            r.pruned = vi.lower;
        else if (!vi.lower.is_infinite())
            r.num.push_back(GaussTerm{zeros(), b});
        return make(std::move(r));
    }

    FieldElement variable(std::size_t i) const {
        std::vector<int> e = zeros();
        e[i] = 1;
        return make(FracRep{{GaussTerm{e, base()->one()}}, unit_den(), Value::infinity()});
    }

    FieldElement lift(const ResidueElement& r) const override {
        require(same_field(r.field(), k_), ErrorKind::DomainError, "residue of another field");
        Terms num = lift_poly(r.num()), den = lift_poly(r.den());
        return normalize(std::move(num), std::move(den), Value::infinity());
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<FracRep>();
        const auto& y = b.as<FracRep>();
        if (is_exact_zero(a)) return b;
        if (is_exact_zero(b)) return a;
        Value pruned = min(x.pruned, y.pruned);
        if (terms_identical(x.den, y.den)) return normalize(padd(x.num, y.num), x.den, pruned);
        if (x.den.size() == 1 && y.den.size() == 1) {
            std::vector<int> l(vars_.size());
            std::vector<int> ax(vars_.size()), ay(vars_.size());
            for (std::size_t i = 0; i < l.size(); ++i) {
                l[i] = std::max(x.den[0].e[i], y.den[0].e[i]);
                ax[i] = l[i] - x.den[0].e[i];
                ay[i] = l[i] - y.den[0].e[i];
            }
            Terms den{GaussTerm{l, base()->one()}};
            return normalize(padd(pmonomial(x.num, ax), pmonomial(y.num, ay)), std::move(den), pruned);
        }
        return normalize(padd(pmul(x.num, y.den), pmul(y.num, x.den)), pmul(x.den, y.den), pruned);
    }

    FieldElement neg(const FieldElement& a) const override {
        FracRep r = a.as<FracRep>();
        for (auto& t : r.num) t.c = -t.c;
        return make(std::move(r));
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<FracRep>();
        const auto& y = b.as<FracRep>();
        if (is_exact_zero(a) || is_exact_zero(b)) return zero();
        Value vx = num_val(x), vy = num_val(y);
        Value pruned = min(x.pruned + vy, y.pruned + vx);
        if (x.num.empty() || y.num.empty()) return make(FracRep{{}, unit_den(), pruned});
        Terms den;
        if (terms_identical(x.den, y.num)) {
            return normalize(x.num, y.den, pruned);
        } else if (terms_identical(y.den, x.num)) {
            return normalize(y.num, x.den, pruned);
        }
        den = (x.den.size() == 1 && x.den[0].e == zeros()) ? y.den : pmul(x.den, y.den);
        return normalize(pmul(x.num, y.num), std::move(den), pruned);
    }

    FieldElement inv(const FieldElement& a) const override {
        const auto& x = a.as<FracRep>();
        require(!is_exact_zero(a), ErrorKind::DomainError, "division by zero");
        require(!x.num.empty(), ErrorKind::InsufficientPrecision, "division by an element that vanishes to precision");
        Value v = num_val(x);
        require(v < x.pruned, ErrorKind::InsufficientPrecision, "division by an element that vanishes to precision");
        // 1/(n + O(P)) = (1/n)(1 + O(P - v(n)))
        return normalize(x.den, x.num, shifted(x.pruned, -v.rational()));
    }

    ValInfo val_info(const FieldElement& a) const override {
        const auto& x = a.as<FracRep>();
        Value v = num_val(x);
        if (v < x.pruned) return ValInfo{v, true};
        if (x.pruned.is_infinite()) return ValInfo{Value::infinity(), true};
        return ValInfo{x.pruned, false};
    }

    ResidueElement residue(const FieldElement& a) const override {
        ValInfo vi = val_info(a);
        require(vi.exact, ErrorKind::InsufficientPrecision, "residue of an element vanishing to precision");
        require(vi.lower == Value(0), ErrorKind::NotAUnit, "residue of a non-unit");
        const auto& x = a.as<FracRep>();
        return reduce_poly(x.num) / reduce_poly(x.den);
    }

    bool is_exact_zero(const FieldElement& a) const override {
        const auto& x = a.as<FracRep>();
        return x.num.empty() && x.pruned.is_infinite();
    }

    bool identical(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<FracRep>();
        const auto& y = b.as<FracRep>();
        return x.pruned == y.pruned && terms_identical(x.num, y.num) && terms_identical(x.den, y.den);
    }

    std::string str(const FieldElement& a) const override {
        const auto& x = a.as<FracRep>();
        std::string n = poly_text(x.num);
        if (!x.pruned.is_infinite()) n += (x.num.empty() ? "" : " + ") + std::string("O(v>=") + x.pruned.str() + ")";
        if (x.den.size() == 1 && x.den[0].e == zeros()) return n;
        return "(" + n + ")/(" + poly_text(x.den) + ")";
    }

    bool resolve_symbol(const std::string& name, FieldElement& out) const override {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) {
                out = variable(i);
                return true;
            }
        }
        return ValuedField::resolve_symbol(name, out);
    }

   private:
    std::vector<int> zeros() const { return std::vector<int>(vars_.size(), 0); }
    Terms unit_den() const { return Terms{GaussTerm{zeros(), base()->one()}}; }

    static Value num_val(const FracRep& x) {
        Value v = Value::infinity();
        for (const auto& t : x.num) v = min(v, t.c.val());
        return v;
    }

    /// Drops vanishing numerator terms into the bound, rescales the
    /// denominator to value 0 and caps relative precision.
    FieldElement normalize(Terms num, Terms den, Value pruned) const {
        Terms dclean;
        for (auto& t : den)
            if (!t.c.is_zero()) dclean.push_back(std::move(t));
        require(!dclean.empty(), ErrorKind::InsufficientPrecision, "denominator vanishes to precision");
        Value dv = Value::infinity();
        for (const auto& t : dclean) dv = min(dv, t.c.val());
        if (dclean.size() == 1 && dclean[0].c.identical(base()->one())) {
        } else if (dclean.size() == 1) {
            FieldElement c = dclean[0].c.inverse();
            num = pscale(num, c);
            pruned = shifted(pruned, -dv.rational());
            dclean[0].c = base()->one();
        } else if (!(dv == Value(0))) {
            long long k = dv.rational().numerator();
            require(dv.rational().denominator() == 1, ErrorKind::DomainError, "non-integral coefficient value");
            FieldElement s = base()->uniformizer().pow(-k);
            num = pscale(num, s);
            dclean = pscale(dclean, s);
            pruned = shifted(pruned, -dv.rational());
        }
        Terms nclean;
        for (auto& t : num) {
            ValInfo vi = t.c.val_info();
            if (!vi.exact)
                pruned = min(pruned, vi.lower);
            else if (!vi.lower.is_infinite())
                nclean.push_back(std::move(t));
        }
        Value v = Value::infinity();
        for (const auto& t : nclean) v = min(v, t.c.val());
        if (!v.is_infinite()) {
            Value cap = shifted(Value(v), Rational(precision()));
            if (cap < pruned) pruned = cap;
            Terms kept;
            for (auto& t : nclean)
                if (t.c.val() < pruned) kept.push_back(std::move(t));
            nclean = std::move(kept);
        }
        return make(FracRep{std::move(nclean), std::move(dclean), pruned});
    }

    Terms lift_poly(const MPoly& m) const {
        const ResidueFieldPtr& bk = base()->residue_field();
        const int nb = bk->nvars();
        const int ng = static_cast<int>(vars_.size());
        Acc acc;
        for (const auto& t : m.terms()) {
            MPoly::Exps e = m.exponents(t.key);
            MPoly::Exps be(e.begin(), e.begin() + nb);
            std::vector<int> ge(e.begin() + nb, e.begin() + nb + ng);
            ResidueElement r = bk->fraction(MPoly::monomial(bk->fq(), be, t.c), MPoly::constant(bk->fq(), nb, 1));
            accumulate(acc, ge, base()->lift(r));
        }
        return from_acc(acc);
    }

    ResidueElement reduce_poly(const Terms& ts) const {
        ResidueElement acc = k_->zero();
        for (const auto& t : ts) {
            if (!(t.c.val() == Value(0))) continue;
            ResidueElement c = k_->extend(t.c.residue());
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (t.e[i]) c *= k_->variable(static_cast<int>(k_->nvars() - vars_.size() + i)).pow(t.e[i]);
            acc += c;
        }
        return acc;
    }

    std::string poly_text(const Terms& ts) const {
        if (ts.empty()) return "0";
        std::ostringstream os;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (j) os << " + ";
            os << '(' << ts[j].c.str() << ')';
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (!ts[j].e[i]) continue;
                os << '*' << vars_[i];
                if (ts[j].e[i] > 1) os << '^' << ts[j].e[i];
            }
        }
        return os.str();
    }

    std::vector<std::string> vars_;
    ResidueFieldPtr k_;
};

}  // namespace

FieldPtr make_gauss(FieldPtr base, std::vector<std::string> vars) {
    require(static_cast<bool>(base), ErrorKind::DomainError, "gauss: missing base");
    require(!vars.empty(), ErrorKind::ParseError, "gauss: needs at least one variable");
    for (const auto& v : vars) {
        FieldElement dummy;
        require(v != "th" && !base->resolve_symbol(v, dummy), ErrorKind::ParseError,
                "gauss: variable '" + v + "' clashes with a symbol of the base");
    }
    return std::make_shared<const GaussField>(std::move(base), std::move(vars));
}

}  // namespace hdv
