#include "hdvlab/residue/residue_field.hpp"

#include "hdvlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hdv {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

unsigned parse_unsigned(const std::string& s) {
    require(!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }),
            ErrorKind::ParseError, "expected a positive integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

bool valid_identifier(const std::string& v) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    return std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

ResidueFieldPtr ResidueField::finite(unsigned p, unsigned d) {
    return ResidueFieldPtr(new ResidueField(std::make_shared<const FiniteField>(p, d), {}));
}

ResidueFieldPtr ResidueField::rational_functions(unsigned p, unsigned d, std::vector<std::string> vars) {
    for (const auto& v : vars) {
        require(valid_identifier(v), ErrorKind::ParseError, "bad variable name '" + v + "'");
        require((v != "w" || d == 1) && v != "t" && v != "p", ErrorKind::ParseError, "variable name '" + v + "' is reserved");
    }
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::ParseError,
            "duplicate variable names");
    return ResidueFieldPtr(new ResidueField(std::make_shared<const FiniteField>(p, d), std::move(vars)));
}

ResidueFieldPtr ResidueField::parse(const std::string& raw) {
    std::string text = trim(raw);
    auto open = text.find('(');
    require(open != std::string::npos && text.back() == ')', ErrorKind::ParseError,
            "bad residue field descriptor '" + text + "'");
    std::string head = trim(text.substr(0, open));
    std::string body = text.substr(open + 1, text.size() - open - 2);
    std::string nums = body, vars;
    auto semi = body.find(';');
    if (semi != std::string::npos) {
        nums = body.substr(0, semi);
        vars = body.substr(semi + 1);
    }
    auto parts = split(nums, ',');
    require(parts.size() == 1 || parts.size() == 2, ErrorKind::ParseError, "bad field parameters in '" + text + "'");
    unsigned p = parse_unsigned(parts[0]);
    unsigned d = parts.size() == 2 ? parse_unsigned(parts[1]) : 1;
    if (head == "Fq" || head == "fq" || head == "F") {
        require(semi == std::string::npos, ErrorKind::ParseError, "finite field takes no variables");
        return finite(p, d);
    }
    if (head == "RatFun" || head == "ratfun") {
        auto vs = split(vars, ',');
        require(!vs.empty() && !(vs.size() == 1 && vs[0].empty()), ErrorKind::ParseError,
                "rational function field needs variables");
        return rational_functions(p, d, vs);
    }
    fail(ErrorKind::ParseError, "unknown residue field '" + head + "'");
}

ResidueFieldPtr ResidueField::with_extra_vars(const std::vector<std::string>& extra) const {
    auto all = vars_;
    all.insert(all.end(), extra.begin(), extra.end());
    return rational_functions(fq_->p(), fq_->degree(), all);
}

bool same_field(const ResidueFieldPtr& a, const ResidueFieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

ResidueElement ResidueField::zero() const { return from_fq(0); }
ResidueElement ResidueField::one() const { return from_fq(1); }
ResidueElement ResidueField::from_int(long long n) const { return from_fq(fq_->from_int(n)); }

ResidueElement ResidueField::from_fq(FiniteField::Elem c) const {
    return ResidueElement(shared_from_this(), MPoly::constant(fq_, nvars(), c), MPoly::constant(fq_, nvars(), 1));
}

ResidueElement ResidueField::variable(int i) const {
    require(i >= 0 && i < nvars(), ErrorKind::DomainError, "variable index out of range");
    return ResidueElement(shared_from_this(), MPoly::variable(fq_, nvars(), i), MPoly::constant(fq_, nvars(), 1));
}

ResidueElement ResidueField::variable(const std::string& name) const {
    if (name == "w" && fq_degree() > 1) return from_fq(fq_->generator());
    auto it = std::find(vars_.begin(), vars_.end(), name);
    require(it != vars_.end(), ErrorKind::ParseError, "unknown residue variable '" + name + "'");
    return variable(static_cast<int>(it - vars_.begin()));
}

ResidueElement ResidueField::fraction(MPoly num, MPoly den) const {
    return ResidueElement(shared_from_this(), std::move(num), std::move(den));
}

ResidueElement ResidueField::extend(const ResidueElement& r) const {
    const ResidueField& src = *r.field();
    require(*src.fq_ == *fq_ && src.nvars() <= nvars() &&
                std::equal(src.vars_.begin(), src.vars_.end(), vars_.begin()),
            ErrorKind::DomainError, "extend: " + src.descriptor() + " is not a subfield of " + descriptor());
    if (src.nvars() == nvars()) return fraction(r.num(), r.den());
    auto widen = [&](const MPoly& m) {
        std::vector<MPoly::Term> terms;
        MPoly shape(fq_, nvars());
        for (const auto& t : m.terms()) {
            MPoly::Exps e = m.exponents(t.key);
            e.resize(nvars(), 0);
            terms.push_back(MPoly::Term{shape.pack(e), t.c});
        }
        return MPoly::from_terms(fq_, nvars(), std::move(terms));
    };
    return fraction(widen(r.num()), widen(r.den()));
}

std::vector<ResidueElement> ResidueField::all_elements() const {
    require(is_finite(), ErrorKind::UnsupportedField, "cannot enumerate an infinite residue field");
    std::vector<ResidueElement> out;
    out.reserve(fq_->order());
    for (std::uint64_t c = 0; c < fq_->order(); ++c) out.push_back(from_fq(static_cast<FiniteField::Elem>(c)));
    return out;
}

std::string ResidueField::descriptor() const {
    std::ostringstream os;
    if (is_finite()) {
        os << "Fq(" << fq_->p() << ',' << fq_->degree() << ')';
    } else {
        os << "RatFun(" << fq_->p() << ',' << fq_->degree() << ';';
        for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
        os << ')';
    }
    return os.str();
}

ResidueElement::ResidueElement(ResidueFieldPtr k, MPoly num, MPoly den)
    : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)) {
    require(!den_.is_zero(), ErrorKind::DomainError, "zero denominator in residue field");
    const auto& f = k_->fq();
    if (num_.is_zero()) {
        den_ = MPoly::constant(f, k_->nvars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    FiniteField::Elem lc_inv = f->inv(den_.leading().c);
    num_ = num_.scale(lc_inv);
    den_ = den_.scale(lc_inv);
}

bool ResidueElement::is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_value() == 1; }

FiniteField::Elem ResidueElement::constant_value() const {
    require(is_constant(), ErrorKind::DomainError, "residue element is not a constant");
    return num_.constant_value();
}

ResidueElement::ResidueElement(ResidueFieldPtr k, MPoly num, MPoly den, Reduced)
    : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)) {
    const auto& f = k_->fq();
    if (num_.is_zero()) {
        den_ = MPoly::constant(f, k_->nvars(), 1);
        return;
    }
    FiniteField::Elem lc = den_.leading().c;
    if (lc != 1) {
        FiniteField::Elem lc_inv = f->inv(lc);
        num_ = num_.scale(lc_inv);
        den_ = den_.scale(lc_inv);
    }
}

ResidueElement ResidueElement::operator-() const { return ResidueElement(k_, -num_, den_, Reduced{}); }

// Sums and products below cancel only the factors that can survive, which
// keeps the gcd inputs small.
ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
    require(same_field(a.k_, b.k_), ErrorKind::DomainError, "residue fields differ");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto& k = a.k_;
    if (a.den_.is_constant() && b.den_.is_constant())
        return ResidueElement(k, a.num_ + b.num_, a.den_, ResidueElement::Reduced{});
    if (a.den_ == b.den_) return ResidueElement(k, a.num_ + b.num_, a.den_);
    if (a.den_.is_constant())
        return ResidueElement(k, a.num_ * b.den_ + b.num_, b.den_, ResidueElement::Reduced{});
    if (b.den_.is_constant())
        return ResidueElement(k, a.num_ + b.num_ * a.den_, a.den_, ResidueElement::Reduced{});
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_constant())
        return ResidueElement(k, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, ResidueElement::Reduced{});
    MPoly da = exact_div(a.den_, g), db = exact_div(b.den_, g);
    MPoly num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return k->zero();
    MPoly h = gcd(num, g);
    if (!h.is_constant()) {
        num = exact_div(num, h);
        g = exact_div(g, h);
    }
    return ResidueElement(k, std::move(num), da * db * g, ResidueElement::Reduced{});
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) { return a + (-b); }

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
    require(same_field(a.k_, b.k_), ErrorKind::DomainError, "residue fields differ");
    const auto& k = a.k_;
    if (a.is_zero() || b.is_zero()) return k->zero();
    MPoly na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
    MPoly g1 = gcd(na, db);
    if (!g1.is_constant()) {
        na = exact_div(na, g1);
        db = exact_div(db, g1);
    }
    MPoly g2 = gcd(nb, da);
    if (!g2.is_constant()) {
        nb = exact_div(nb, g2);
        da = exact_div(da, g2);
    }
    return ResidueElement(k, na * nb, da * db, ResidueElement::Reduced{});
}

ResidueElement ResidueElement::inverse() const {
    require(!is_zero(), ErrorKind::DomainError, "inverse of zero residue");
    return ResidueElement(k_, den_, num_, Reduced{});
}

ResidueElement operator/(const ResidueElement& a, const ResidueElement& b) { return a * b.inverse(); }

ResidueElement ResidueElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    return ResidueElement(k_, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{});
}

ResidueElement ResidueElement::frobenius() const { return pow(k_->characteristic()); }

ResidueElement ResidueElement::scale_int(long long n) const { return *this * k_->from_int(n); }

bool operator==(const ResidueElement& a, const ResidueElement& b) {
    return same_field(a.k_, b.k_) && a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const ResidueElement& a, const ResidueElement& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

std::string ResidueElement::str() const {
    if (!k_) return "<null>";
    const auto& names = k_->vars();
    std::string n = num_.str(names);
    if (den_.is_constant()) return n;
    auto wrap = [](const std::string& s, const MPoly& m) {
        return m.terms().size() > 1 || s.find('+') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(n, num_) + "/" + wrap(den_.str(names), den_);
}

}  // namespace hdv
