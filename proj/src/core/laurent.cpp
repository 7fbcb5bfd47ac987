#include "hdvlab/core/field.hpp"

#include <map>
#include <sstream>

namespace hdv {

namespace {

class LaurentField final : public ValuedField {
   public:
    LaurentField(ResidueFieldPtr k, int precision)
        : ValuedField(k->characteristic(), k->characteristic(), precision, nullptr), k_(std::move(k)) {
        require(precision >= 2, ErrorKind::DomainError, "precision must be at least 2");
    }

    Kind kind() const override { return Kind::Laurent; }
    ResidueFieldPtr residue_field() const override { return k_; }
    Value v_of_p() const override { return Value::infinity(); }
    std::string descriptor() const override { return "laurent(" + k_->descriptor() + ")"; }
    FieldElement uniformizer() const override { return monomial(k_->one(), 1); }

    FieldElement lift(const ResidueElement& r) const override {
        require(same_field(r.field(), k_), ErrorKind::DomainError, "residue of another field");
        return monomial(r, 0);
    }

    FieldElement from_int(long long n) const override { return monomial(k_->from_int(n), 0); }
    FieldElement from_mpz(const mpz_class& n) const override {
        mpz_class r = n % k_->characteristic();
        return from_int(r.get_si());
    }

    FieldElement monomial(const ResidueElement& c, long e) const {
        if (c.is_zero()) return make(SeriesRep{});
        return make(SeriesRep{{SeriesTerm{e, c}}, e + precision()});
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<SeriesRep>();
        const auto& y = b.as<SeriesRep>();
        long abs = std::min(x.abs, y.abs);
        std::vector<SeriesTerm> out;
        std::size_t i = 0, j = 0;
        while (i < x.terms.size() || j < y.terms.size()) {
            if (j == y.terms.size() || (i < x.terms.size() && x.terms[i].e < y.terms[j].e)) {
                if (x.terms[i].e < abs) out.push_back(x.terms[i]);
                ++i;
            } else if (i == x.terms.size() || y.terms[j].e < x.terms[i].e) {
                if (y.terms[j].e < abs) out.push_back(y.terms[j]);
                ++j;
            } else {
                ResidueElement c = x.terms[i].c + y.terms[j].c;
                if (!c.is_zero() && x.terms[i].e < abs) out.push_back(SeriesTerm{x.terms[i].e, c});
                ++i;
                ++j;
            }
        }
        return make(normalize(std::move(out), abs));
    }

    FieldElement neg(const FieldElement& a) const override {
        SeriesRep r = a.as<SeriesRep>();
        for (auto& t : r.terms) t.c = -t.c;
        return make(std::move(r));
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<SeriesRep>();
        const auto& y = b.as<SeriesRep>();
        bool xz = x.terms.empty(), yz = y.terms.empty();
        if ((xz && x.abs == kExact) || (yz && y.abs == kExact)) return make(SeriesRep{});
        long lx = xz ? x.abs : x.terms[0].e, ly = yz ? y.abs : y.terms[0].e;
        long abs = std::min(x.abs + ly, y.abs + lx);
        if (xz || yz) return make(SeriesRep{{}, abs});
        std::map<long, ResidueElement> acc;
        for (const auto& s : x.terms) {
            for (const auto& u : y.terms) {
                long e = s.e + u.e;
                if (e >= abs) break;
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, s.c * u.c);
                else
                    it->second += s.c * u.c;
            }
        }
        std::vector<SeriesTerm> out;
        for (auto& [e, c] : acc)
            if (!c.is_zero()) out.push_back(SeriesTerm{e, std::move(c)});
        return make(normalize(std::move(out), abs));
    }

    FieldElement inv(const FieldElement& a) const override {
        const auto& x = a.as<SeriesRep>();
        require(!(x.terms.empty() && x.abs == kExact), ErrorKind::DomainError, "division by zero");
        require(!x.terms.empty(), ErrorKind::InsufficientPrecision, "division by an element that vanishes to precision");
        long v = x.terms[0].e;
        long rel = x.abs - v;
        ResidueElement c0inv = x.terms[0].c.inverse();
        // b_n = -c0^{-1} sum_{k>=1} a_k b_{n-k}, a_k the coefficient of t^{v+k}
        std::vector<ResidueElement> b(static_cast<std::size_t>(rel), k_->zero());
        b[0] = c0inv;
        for (long n = 1; n < rel; ++n) {
            ResidueElement s = k_->zero();
            for (std::size_t i = 1; i < x.terms.size(); ++i) {
                long k = x.terms[i].e - v;
                if (k > n) break;
                if (!b[n - k].is_zero()) s += x.terms[i].c * b[n - k];
            }
            b[n] = -(c0inv * s);
        }
        std::vector<SeriesTerm> out;
        for (long n = 0; n < rel; ++n)
            if (!b[n].is_zero()) out.push_back(SeriesTerm{n - v, b[n]});
        return make(SeriesRep{std::move(out), rel - v});
    }

    ValInfo val_info(const FieldElement& a) const override {
        const auto& x = a.as<SeriesRep>();
        if (x.terms.empty()) return x.abs == kExact ? ValInfo{Value::infinity(), true} : ValInfo{Value(x.abs), false};
        return ValInfo{Value(x.terms[0].e), true};
    }

    ResidueElement residue(const FieldElement& a) const override {
        const auto& x = a.as<SeriesRep>();
        require(!x.terms.empty(), x.abs == kExact ? ErrorKind::NotAUnit : ErrorKind::InsufficientPrecision,
                "residue of zero");
        require(x.terms[0].e == 0, ErrorKind::NotAUnit, "residue of a non-unit");
        return x.terms[0].c;
    }

    bool is_exact_zero(const FieldElement& a) const override {
        const auto& x = a.as<SeriesRep>();
        return x.terms.empty() && x.abs == kExact;
    }

    bool identical(const FieldElement& a, const FieldElement& b) const override {
        const auto& x = a.as<SeriesRep>();
        const auto& y = b.as<SeriesRep>();
        if (x.abs != y.abs || x.terms.size() != y.terms.size()) return false;
        for (std::size_t i = 0; i < x.terms.size(); ++i)
            if (x.terms[i].e != y.terms[i].e || x.terms[i].c != y.terms[i].c) return false;
        return true;
    }

    std::string str(const FieldElement& a) const override {
        const auto& x = a.as<SeriesRep>();
        if (x.terms.empty() && x.abs == kExact) return "0";
        std::ostringstream os;
        for (const auto& t : x.terms) {
            os << '(' << t.c.str() << ')';
            if (t.e != 0) os << "*t^" << t.e;
            os << " + ";
        }
        os << "O(t^" << x.abs << ')';
        return os.str();
    }

    bool resolve_symbol(const std::string& name, FieldElement& out) const override {
        if (name == "t") {
            out = uniformizer();
            return true;
        }
        if (name == "p") {
            out = from_int(0);
            return true;
        }
        if (name == "w" && k_->fq_degree() > 1) {
            out = lift(k_->from_fq(k_->fq()->generator()));
            return true;
        }
        for (const auto& v : k_->vars()) {
            if (v == name) {
                out = lift(k_->variable(name));
                return true;
            }
        }
        return false;
    }

   private:
    SeriesRep normalize(std::vector<SeriesTerm> terms, long abs) const {
        if (terms.empty()) return SeriesRep{{}, abs};
        long cap = std::min(abs, terms[0].e + static_cast<long>(precision()));
        while (!terms.empty() && terms.back().e >= cap) terms.pop_back();
        return SeriesRep{std::move(terms), cap};
    }

    ResidueFieldPtr k_;
};

}  // namespace

FieldPtr make_laurent(ResidueFieldPtr k, int precision) {
    require(static_cast<bool>(k), ErrorKind::DomainError, "laurent: missing residue field");
    return std::make_shared<const LaurentField>(std::move(k), precision);
}

}  // namespace hdv
