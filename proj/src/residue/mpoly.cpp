#include "hdvlab/residue/mpoly.hpp"

#include "hdvlab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hdv {

namespace {

struct FieldOps {
    const FiniteField& F;
    bool prime;
    unsigned p;
    explicit FieldOps(const FiniteField& f) : F(f), prime(f.degree() == 1), p(f.p()) {}
    MPoly::Elem mul(MPoly::Elem a, MPoly::Elem b) const {
        return prime ? static_cast<MPoly::Elem>((static_cast<std::uint64_t>(a) * b) % p) : F.mul(a, b);
    }
    MPoly::Elem add(MPoly::Elem a, MPoly::Elem b) const {
        if (prime) {
            MPoly::Elem s = a + b;
            return s >= p ? s - p : s;
        }
        return F.add(a, b);
    }
};

void sort_and_combine(std::vector<MPoly::Term>& terms, const FieldOps& ops) {
    std::sort(terms.begin(), terms.end(), [](const MPoly::Term& x, const MPoly::Term& y) { return x.key > y.key; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        MPoly::Term t = terms[i++];
        while (i < terms.size() && terms[i].key == t.key) t.c = ops.add(t.c, terms[i++].c);
        if (t.c != 0) terms[out++] = t;
    }
    terms.resize(out);
}

}  // namespace

MPoly::MPoly(FiniteFieldPtr f, int nvars) : f_(std::move(f)), n_(nvars) {
    require(nvars >= 0 && nvars <= 8, ErrorKind::UnsupportedField, "at most 8 residue variables are supported");
    bits_ = nvars <= 4 ? 16 : 8;
    guard_ = 0;
    for (int i = 0; i < nvars; ++i) guard_ |= Key{1} << (i * bits_ + bits_ - 1);
}

MPoly MPoly::from_terms(FiniteFieldPtr f, int nvars, std::vector<Term> sorted_terms) {
    MPoly out(std::move(f), nvars);
    out.t_ = std::move(sorted_terms);
    return out;
}

MPoly MPoly::constant(FiniteFieldPtr f, int nvars, Elem c) {
    MPoly out(std::move(f), nvars);
    if (c != 0) out.t_.push_back({0, c});
    return out;
}

MPoly MPoly::variable(FiniteFieldPtr f, int nvars, int i) {
    Exps e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(f), e, 1);
}

MPoly MPoly::monomial(FiniteFieldPtr f, const Exps& e, Elem c) {
    MPoly out(std::move(f), static_cast<int>(e.size()));
    if (c != 0) out.t_.push_back({out.pack(e), c});
    return out;
}

MPoly MPoly::from_key(FiniteFieldPtr f, int nvars, Key k, Elem c) {
    MPoly out(std::move(f), nvars);
    if (c != 0) out.t_.push_back({k, c});
    return out;
}

int MPoly::exponent(Key k, int var) const {
    int shift = (n_ - 1 - var) * bits_;
    return static_cast<int>((k >> shift) & ((Key{1} << bits_) - 1));
}

MPoly::Exps MPoly::exponents(Key k) const {
    Exps e(n_);
    for (int i = 0; i < n_; ++i) e[i] = exponent(k, i);
    return e;
}

MPoly::Key MPoly::pack(const Exps& e) const {
    require(static_cast<int>(e.size()) == n_, ErrorKind::DomainError, "exponent vector length mismatch");
    Key k = 0;
    const int cap = (1 << (bits_ - 1)) - 1;
    for (int i = 0; i < n_; ++i) {
        require(e[i] >= 0 && e[i] <= cap, ErrorKind::DomainError, "exponent out of range");
        k |= static_cast<Key>(e[i]) << ((n_ - 1 - i) * bits_);
    }
    return k;
}

bool MPoly::key_divides(Key small, Key big) const { return (((big | guard_) - small) & guard_) == guard_; }

MPoly::Key MPoly::key_add(Key a, Key b) const {
    Key s = a + b;
    require((s & guard_) == 0, ErrorKind::DomainError, "exponent overflow");
    return s;
}

MPoly::Elem MPoly::constant_value() const {
    require(is_constant(), ErrorKind::DomainError, "polynomial is not constant");
    return t_.empty() ? 0 : t_[0].c;
}

int MPoly::degree_in(int var) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& t : t_) d = std::max(d, exponent(t.key, var));
    return d;
}

int MPoly::total_degree() const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& t : t_) {
        int s = 0;
        for (int i = 0; i < n_; ++i) s += exponent(t.key, i);
        d = std::max(d, s);
    }
    return d;
}

MPoly::Elem MPoly::coefficient(const Exps& e) const {
    Key k = pack(e);
    for (const auto& t : t_)
        if (t.key == k) return t.c;
    return 0;
}

std::vector<int> MPoly::support() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (degree_in(i) > 0) out.push_back(i);
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& t : out.t_) t.c = f_->neg(t.c);
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.t_.empty()) return b;
    if (b.t_.empty()) return a;
    FieldOps ops(*a.f_);
    MPoly out(a.f_, a.n_);
    out.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        if (a.t_[i].key > b.t_[j].key) {
            out.t_.push_back(a.t_[i++]);
        } else if (b.t_[j].key > a.t_[i].key) {
            out.t_.push_back(b.t_[j++]);
        } else {
            MPoly::Elem c = ops.add(a.t_[i].c, b.t_[j].c);
            if (c != 0) out.t_.push_back({a.t_[i].key, c});
            ++i;
            ++j;
        }
    }
    out.t_.insert(out.t_.end(), a.t_.begin() + static_cast<long>(i), a.t_.end());
    out.t_.insert(out.t_.end(), b.t_.begin() + static_cast<long>(j), b.t_.end());
    return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.t_.empty() || b.t_.empty()) return MPoly(a.f_ ? a.f_ : b.f_, a.n_);
    if (a.t_.size() == 1) return b.mul_monomial(a.t_[0].key, a.t_[0].c);
    if (b.t_.size() == 1) return a.mul_monomial(b.t_[0].key, b.t_[0].c);
    FieldOps ops(*a.f_);
    std::vector<MPoly::Term> terms;
    terms.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
        for (const auto& y : b.t_) terms.push_back({a.key_add(x.key, y.key), ops.mul(x.c, y.c)});
    sort_and_combine(terms, ops);
    return MPoly::from_terms(a.f_, a.n_, std::move(terms));
}

MPoly MPoly::mul_monomial(Key k, Elem c) const {
    if (c == 0) return MPoly(f_, n_);
    FieldOps ops(*f_);
    MPoly out = *this;
    for (auto& t : out.t_) {
        t.key = key_add(t.key, k);
        t.c = ops.mul(t.c, c);
    }
    return out;
}

MPoly MPoly::scale(Elem c) const { return mul_monomial(0, c); }

MPoly MPoly::pow(unsigned e) const {
    MPoly r = constant(f_, n_, 1);
    MPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    std::vector<Term> terms;
    const Key unit = Key{1} << ((n_ - 1 - var) * bits_);
    for (const auto& t : t_) {
        int ex = exponent(t.key, var);
        if (ex == 0) continue;
        Elem k = f_->from_int(ex);
        if (k == 0) continue;
        terms.push_back({t.key - unit, f_->mul(t.c, k)});
    }
    return from_terms(f_, n_, std::move(terms));
}

MPoly MPoly::monic() const {
    if (t_.empty()) return *this;
    return scale(f_->inv(t_.front().c));
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].key != b.t_[i].key || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
    std::size_t n = std::min(a.t_.size(), b.t_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.t_[i].key != b.t_[i].key) return a.t_[i].key < b.t_[i].key;
        if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c;
    }
    return a.t_.size() < b.t_.size();
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        if (!first) os << " + ";
        first = false;
        bool mono = false;
        std::ostringstream m;
        for (int i = 0; i < n_; ++i) {
            int ex = exponent(t.key, i);
            if (ex == 0) continue;
            if (mono) m << '*';
            mono = true;
            m << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (ex > 1) m << '^' << ex;
        }
        std::string c = f_->str(t.c);
        bool compound = c.find('+') != std::string::npos;
        if (!mono) {
            os << c;
        } else if (t.c == 1) {
            os << m.str();
        } else {
            os << (compound ? "(" + c + ")" : c) << '*' << m.str();
        }
    }
    return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    require(!b.is_zero(), ErrorKind::DomainError, "division by zero polynomial");
    const auto& f = b.field();
    const int n = b.nvars();
    if (b.is_monomial()) {
        const auto& m = b.leading();
        MPoly::Elem inv = f->inv(m.c);
        std::vector<MPoly::Term> terms;
        terms.reserve(a.terms().size());
        for (const auto& t : a.terms()) {
            require(b.key_divides(m.key, t.key), ErrorKind::DomainError, "polynomial division is not exact");
            terms.push_back({t.key - m.key, f->mul(t.c, inv)});
        }
        return MPoly::from_terms(f, n, std::move(terms));
    }
    FieldOps ops(*f);
    const auto& lb = b.leading();
    MPoly::Elem lb_inv = f->inv(lb.c);
    std::map<MPoly::Key, MPoly::Elem, std::greater<>> r;
    for (const auto& t : a.terms()) r.emplace(t.key, t.c);
    std::vector<MPoly::Term> q;
    while (!r.empty()) {
        auto [rk, rc] = *r.begin();
        require(b.key_divides(lb.key, rk), ErrorKind::DomainError, "polynomial division is not exact");
        MPoly::Key qk = rk - lb.key;
        MPoly::Elem qc = ops.mul(rc, lb_inv);
        q.push_back({qk, qc});
        MPoly::Elem neg_qc = f->neg(qc);
        for (const auto& t : b.terms()) {
            MPoly::Key k = qk + t.key;
            MPoly::Elem c = ops.mul(neg_qc, t.c);
            auto [it, fresh] = r.emplace(k, c);
            if (!fresh) {
                it->second = ops.add(it->second, c);
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return MPoly::from_terms(f, n, std::move(q));
}

bool divides(const MPoly& b, const MPoly& a) {
    try {
        (void)exact_div(a, b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

// Fieldwise minimum over all term keys: the largest monomial dividing a.
MPoly::Key monomial_content(const MPoly& a) {
    std::vector<int> e = a.exponents(a.terms().front().key);
    for (const auto& t : a.terms())
        for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(e[i], a.exponent(t.key, i));
    return a.pack(e);
}

MPoly::Key min_keys(const MPoly& shape, MPoly::Key x, MPoly::Key y) {
    std::vector<int> e(shape.nvars());
    for (int i = 0; i < shape.nvars(); ++i) e[i] = std::min(shape.exponent(x, i), shape.exponent(y, i));
    return shape.pack(e);
}

using Dense = std::vector<MPoly::Elem>;

Dense to_dense(const MPoly& a, int v) {
    Dense d(static_cast<std::size_t>(std::max(0, a.degree_in(v))) + 1, 0);
    for (const auto& t : a.terms()) d[a.exponent(t.key, v)] = t.c;
    return d;
}

MPoly from_dense(const Dense& d, const MPoly& shape, int v) {
    std::vector<MPoly::Term> terms;
    std::vector<int> e(shape.nvars(), 0);
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        e[v] = static_cast<int>(i);
        terms.push_back({shape.pack(e), d[i]});
    }
    return MPoly::from_terms(shape.field(), shape.nvars(), std::move(terms));
}

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_gcd(Dense a, Dense b, const FiniteField& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        MPoly::Elem inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            MPoly::Elem c = F.mul(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

std::map<int, MPoly> coeffs_in(const MPoly& a, int v) {
    std::map<int, std::vector<MPoly::Term>> acc;
    const MPoly::Key unit = MPoly::Key{1} << ((a.nvars() - 1 - v) * a.bits());
    for (const auto& t : a.terms()) {
        int k = a.exponent(t.key, v);
        acc[k].push_back({t.key - unit * static_cast<MPoly::Key>(k), t.c});
    }
    std::map<int, MPoly> out;
    for (auto& [k, terms] : acc) {
        // Removing x_v keeps the order among terms with equal x_v exponent.
        out.emplace(k, MPoly::from_terms(a.field(), a.nvars(), std::move(terms)));
    }
    return out;
}

MPoly shift_var(const MPoly& a, int v, int k) {
    if (k == 0) return a;
    const MPoly::Key unit = MPoly::Key{1} << ((a.nvars() - 1 - v) * a.bits());
    return a.mul_monomial(unit * static_cast<MPoly::Key>(k), 1);
}

MPoly content_in(const MPoly& a, int v) {
    MPoly c(a.field(), a.nvars());
    for (auto& [k, coef] : coeffs_in(a, v)) {
        c = gcd(c, coef);
        if (c.is_constant()) break;
    }
    return c;
}

MPoly primitive_in(const MPoly& a, int v) {
    MPoly c = content_in(a, v);
    return c.is_constant() ? a.monic() : exact_div(a, c);
}

MPoly pseudo_rem(MPoly a, const MPoly& b, int v) {
    const int n = b.degree_in(v);
    const MPoly lb = coeffs_in(b, v).rbegin()->second;
    while (!a.is_zero() && a.degree_in(v) >= n) {
        auto ca = coeffs_in(a, v);
        int m = ca.rbegin()->first;
        const MPoly la = ca.rbegin()->second;
        MPoly g = gcd(la, lb);
        MPoly fa = exact_div(lb, g), fb = exact_div(la, g);
        a = fa * a - shift_var(fb * b, v, m - n);
    }
    return a;
}

MPoly gcd_primitive(MPoly pa, MPoly pb, int v) {
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        if (pb.degree_in(v) == 0) return MPoly::constant(pa.field(), pa.nvars(), 1);
        MPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        pb = r.is_zero() ? r : primitive_in(r, v);
    }
    return pa.degree_in(v) > 0 ? pa : MPoly::constant(pa.field(), pa.nvars(), 1);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const auto& f = a.field();
    const int n = a.nvars();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(f, n, 1);
    MPoly::Key ma = monomial_content(a), mb = monomial_content(b);
    MPoly::Key m = min_keys(a, ma, mb);
    MPoly mono = MPoly::from_key(f, n, m, 1);
    if (a.is_monomial() || b.is_monomial()) return mono;
    MPoly ra = ma ? exact_div(a, MPoly::from_key(f, n, ma, 1)) : a;
    MPoly rb = mb ? exact_div(b, MPoly::from_key(f, n, mb, 1)) : b;
    if (ra.is_constant() || rb.is_constant()) return mono;
    std::vector<int> sa = ra.support(), sb = rb.support();
    std::vector<int> all;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
    if (all.size() == 1) {
        int v = all[0];
        Dense g = dense_gcd(to_dense(ra, v), to_dense(rb, v), *f);
        return (mono * from_dense(g, ra, v)).monic();
    }
    int v = all.back();
    bool a_has = std::binary_search(sa.begin(), sa.end(), v);
    bool b_has = std::binary_search(sb.begin(), sb.end(), v);
    if (!a_has || !b_has) {
        // v occurs in only one input: the gcd divides every x_v-coefficient.
        const MPoly& with = a_has ? ra : rb;
        const MPoly& without = a_has ? rb : ra;
        MPoly g = without;
        for (auto& [k, coef] : coeffs_in(with, v)) {
            g = gcd(g, coef);
            if (g.is_constant()) break;
        }
        return (mono * g).monic();
    }
    MPoly ca = content_in(ra, v), cb = content_in(rb, v);
    MPoly pa = ca.is_constant() ? ra : exact_div(ra, ca);
    MPoly pb = cb.is_constant() ? rb : exact_div(rb, cb);
    MPoly c = gcd(ca, cb);
    return (mono * c * gcd_primitive(pa, pb, v)).monic();
}

}  // namespace hdv
