#include "hdvlab/residue/residue_ops.hpp"

#include "hdvlab/errors.hpp"

#include <map>

namespace hdv {

namespace {

using Elem = FiniteField::Elem;

// x^(p*e) with coefficient c^p  <-  x^e with coefficient c, inverted.
std::optional<MPoly> poly_pth_root(const MPoly& f) {
    const auto& F = f.field();
    const int p = static_cast<int>(F->p());
    std::vector<MPoly::Term> terms;
    for (const auto& t : f.terms()) {
        MPoly::Exps e = f.exponents(t.key);
        for (int& x : e) {
            if (x % p != 0) return std::nullopt;
            x /= p;
        }
        terms.push_back({f.pack(e), F->pth_root(t.c)});
    }
    // Dividing every exponent by p is monotone in lex order.
    return MPoly::from_terms(F, f.nvars(), std::move(terms));
}

MPoly lcm(const MPoly& a, const MPoly& b) {
    MPoly g = gcd(a, b);
    return exact_div(a * b, g).monic();
}

// Coordinates of a polynomial n in the basis {x^a : 0 <= a_i < p} of K
// over K^p, each transported to K through the inverse Frobenius.
std::vector<MPoly> p_basis_row(const MPoly& n) {
    const auto& F = n.field();
    const unsigned p = F->p();
    const int k = n.nvars();
    std::size_t dim = 1;
    for (int i = 0; i < k; ++i) dim *= p;
    std::vector<MPoly> parts(dim, MPoly(F, k));
    std::vector<std::vector<MPoly::Term>> acc(dim);
    for (const auto& t : n.terms()) {
        std::size_t idx = 0;
        MPoly::Exps q(k);
        for (int i = k; i-- > 0;) {
            int e = n.exponent(t.key, i);
            idx = idx * p + static_cast<std::size_t>(e % static_cast<int>(p));
            q[i] = e / static_cast<int>(p);
        }
        acc[idx].push_back({n.pack(q), F->pth_root(t.c)});
    }
    // Within one residue class the map e -> e div p is monotone.
    for (std::size_t i = 0; i < dim; ++i) parts[i] = MPoly::from_terms(F, k, std::move(acc[i]));
    return parts;
}

// Fraction-free (Bareiss) row echelon rank over the fraction field.
std::size_t rank_fraction_free(std::vector<std::vector<MPoly>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    const auto& F = rows[0][0].field();
    const int n = rows[0][0].nvars();
    MPoly prev = MPoly::constant(F, n, 1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const MPoly pivot = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const MPoly lead = rows[r][col];
            for (std::size_t c = col + 1; c < ncols; ++c) {
                MPoly v = pivot * rows[r][c] - lead * rows[rank][c];
                rows[r][c] = prev.is_constant() ? v.scale(F->inv(prev.constant_value())) : exact_div(v, prev);
            }
            rows[r][col] = MPoly(F, n);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

// Flattens a polynomial into F_p coordinates keyed by (monomial, digit).
void add_coords(const MPoly& f, std::map<std::pair<MPoly::Key, unsigned>, unsigned>& out) {
    const auto& F = f.field();
    for (const auto& t : f.terms()) {
        auto c = F->coords(t.c);
        for (unsigned j = 0; j < c.size(); ++j)
            if (c[j] != 0) out[{t.key, j}] = c[j];
    }
}

unsigned inv_mod(unsigned a, unsigned p) {
    unsigned r = 1, e = p - 2;
    unsigned long long b = a % p;
    while (e) {
        if (e & 1) r = static_cast<unsigned>((r * b) % p);
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

struct LinearSolution {
    std::vector<unsigned> particular;
    std::vector<std::vector<unsigned>> kernel;
};

// Solves M y = rhs over F_p, where M is given by columns.
std::optional<LinearSolution> solve_fp(const std::vector<std::vector<unsigned>>& cols,
                                       const std::vector<unsigned>& rhs, unsigned p) {
    const std::size_t nrows = rhs.size(), ncols = cols.size();
    std::vector<std::vector<unsigned>> m(nrows, std::vector<unsigned>(ncols + 1, 0));
    for (std::size_t c = 0; c < ncols; ++c)
        for (std::size_t r = 0; r < nrows; ++r) m[r][c] = cols[c][r];
    for (std::size_t r = 0; r < nrows; ++r) m[r][ncols] = rhs[r];
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
        std::size_t piv = row;
        while (piv < nrows && m[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(m[row], m[piv]);
        unsigned inv = inv_mod(m[row][c], p);
        for (auto& x : m[row]) x = static_cast<unsigned>((static_cast<unsigned long long>(x) * inv) % p);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            unsigned f = m[r][c];
            for (std::size_t k = c; k <= ncols; ++k)
                m[r][k] = static_cast<unsigned>((m[r][k] + static_cast<unsigned long long>(p - f) * m[row][k]) % p);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (m[r][ncols] != 0) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(ncols, 0);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        sol.particular[pivot_col[r]] = m[r][ncols];
        is_pivot[pivot_col[r]] = true;
    }
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<unsigned> v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - m[r][free]) % p;
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

struct AdditiveSystem {
    MPoly D;
    std::vector<MPoly> basis;  // candidate monomials times F_q basis elements
    std::optional<LinearSolution> sol;
};

// Y^p + B Y = A with X = Y / D.
AdditiveSystem additive_system(const ResidueElement& a, const ResidueElement& b) {
    const auto& K = a.field();
    require(same_field(K, b.field()), ErrorKind::DomainError, "residue fields differ");
    const auto& F = K->fq();
    const unsigned p = K->characteristic();
    const int k = K->nvars();
    AdditiveSystem sys;
    sys.D = lcm(a.den(), b.den());
    MPoly A = exact_div(a.num() * sys.D.pow(p), a.den());
    MPoly B = exact_div(b.num() * sys.D.pow(p - 1), b.den());
    std::vector<int> bound(k, 0);
    for (int i = 0; i < k; ++i) {
        int ba = A.is_zero() ? 0 : A.degree_in(i) / static_cast<int>(p);
        int bb = B.is_zero() ? 0 : B.degree_in(i) / static_cast<int>(p - 1);
        bound[i] = std::max(ba, bb);
    }
    std::vector<MPoly::Exps> monos{MPoly::Exps(k, 0)};
    for (int i = 0; i < k; ++i) {
        std::vector<MPoly::Exps> next;
        for (const auto& m : monos)
            for (int e = 0; e <= bound[i]; ++e) {
                auto m2 = m;
                m2[i] = e;
                next.push_back(std::move(m2));
            }
        monos = std::move(next);
    }
    std::map<std::pair<MPoly::Key, unsigned>, std::size_t> row_index;
    std::vector<std::map<std::pair<MPoly::Key, unsigned>, unsigned>> images;
    for (const auto& m : monos)
        for (unsigned j = 0; j < F->degree(); ++j) {
            std::vector<unsigned> digit(F->degree(), 0);
            digit[j] = 1;
            MPoly u = MPoly::monomial(F, m, F->from_coords(digit));
            MPoly image = u.pow(p) + B * u;
            std::map<std::pair<MPoly::Key, unsigned>, unsigned> coords;
            add_coords(image, coords);
            for (auto& [key, val] : coords) row_index.emplace(key, 0);
            images.push_back(std::move(coords));
            sys.basis.push_back(std::move(u));
        }
    std::map<std::pair<MPoly::Key, unsigned>, unsigned> rhs_coords;
    add_coords(A, rhs_coords);
    for (auto& [key, val] : rhs_coords) row_index.emplace(key, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : row_index) idx = r++;
    std::vector<std::vector<unsigned>> cols;
    for (const auto& img : images) {
        std::vector<unsigned> col(r, 0);
        for (const auto& [key, val] : img) col[row_index[key]] = val;
        cols.push_back(std::move(col));
    }
    std::vector<unsigned> rhs(r, 0);
    for (const auto& [key, val] : rhs_coords) rhs[row_index[key]] = val;
    sys.sol = solve_fp(cols, rhs, p);
    return sys;
}

ResidueElement combine(const AdditiveSystem& sys, const ResidueFieldPtr& K, const std::vector<unsigned>& y) {
    MPoly Y(K->fq(), K->nvars());
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0) Y = Y + sys.basis[i].scale(K->fq()->from_int(y[i]));
    return K->fraction(Y, sys.D);
}

// Univariate polynomials over F_q, coefficients low to high.
using UPoly = std::vector<Elem>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& m, const FiniteField& F) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    Elem inv = F.inv(m.back());
    while (a.size() > dm) {
        Elem c = F.mul(a.back(), inv);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
        trim(a);
    }
    return a;
}

UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, const FiniteField& F) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return umod(r, m, F);
}

UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& m, const FiniteField& F) {
    UPoly r{1};
    base = umod(base, m, F);
    while (e) {
        if (e & 1) r = umulmod(r, base, m, F);
        base = umulmod(base, base, m, F);
        e >>= 1;
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b, const FiniteField& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test for a polynomial of prime degree n over F_q.
bool rabin_prime_degree(const UPoly& f, const FiniteField& F) {
    const std::uint64_t q = F.order();
    const std::size_t n = f.size() - 1;
    UPoly x{0, 1};
    UPoly xq = upowmod(x, q, f, F);
    UPoly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    UPoly g = ugcd(f, diff, F);
    if (g.size() > 1) return false;
    UPoly y = x;
    for (std::size_t i = 0; i < n; ++i) y = upowmod(y, q, f, F);
    y.resize(std::max<std::size_t>(y.size(), 2), 0);
    y[1] = F.sub(y[1], 1);
    trim(y);
    return y.empty();
}

}  // namespace

std::optional<ResidueElement> pth_power_root(const ResidueElement& f) {
    const auto& K = f.field();
    auto n = poly_pth_root(f.num());
    if (!n) return std::nullopt;
    auto d = poly_pth_root(f.den());
    if (!d) return std::nullopt;
    return K->fraction(*n, *d);
}

std::uint64_t pth_power_degree(const ResidueField& k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k.nvars(); ++i) r *= k.characteristic();
    return r;
}

bool p_independent(const std::vector<ResidueElement>& fs) {
    if (fs.empty()) return true;
    const auto& K = fs[0].field();
    for (const auto& f : fs) {
        require(same_field(K, f.field()), ErrorKind::DomainError, "residue fields differ");
        if (f.is_zero()) return false;
    }
    if (fs.size() > static_cast<std::size_t>(K->nvars())) return false;
    const unsigned p = K->characteristic();
    // The p^m products f^e, 0 <= e_i < p, span K^p(f); the degree is p^m
    // exactly when they are independent over K^p.  Each product is scaled
    // by the p-th power prod(den_i^p) so that every row is polynomial.
    std::vector<MPoly> products{MPoly::constant(K->fq(), K->nvars(), 1)};
    for (const auto& f : fs) {
        std::vector<MPoly> num_pows{f.num().pow(0)}, den_pows{f.den().pow(0)};
        for (unsigned e = 1; e <= p; ++e) {
            num_pows.push_back(num_pows.back() * f.num());
            den_pows.push_back(den_pows.back() * f.den());
        }
        std::vector<MPoly> next;
        for (const auto& g : products)
            for (unsigned e = 0; e < p; ++e) next.push_back(g * num_pows[e] * den_pows[p - e]);
        products = std::move(next);
    }
    std::vector<std::vector<MPoly>> rows;
    rows.reserve(products.size());
    for (const auto& g : products) rows.push_back(p_basis_row(g));
    return rank_fraction_free(std::move(rows)) == products.size();
}

bool f_linear_independent(const std::vector<ResidueElement>& fs) {
    if (fs.empty()) return true;
    const auto& K = fs[0].field();
    MPoly L = MPoly::constant(K->fq(), K->nvars(), 1);
    for (const auto& f : fs) {
        require(same_field(K, f.field()), ErrorKind::DomainError, "residue fields differ");
        L = lcm(L, f.den());
    }
    std::vector<std::map<std::pair<MPoly::Key, unsigned>, unsigned>> vecs;
    std::map<std::pair<MPoly::Key, unsigned>, std::size_t> index;
    for (const auto& f : fs) {
        MPoly n = f.num() * exact_div(L, f.den());
        std::map<std::pair<MPoly::Key, unsigned>, unsigned> c;
        add_coords(n, c);
        for (auto& [key, v] : c) index.emplace(key, 0);
        vecs.push_back(std::move(c));
    }
    std::size_t i = 0;
    for (auto& [key, idx] : index) idx = i++;
    std::vector<std::vector<unsigned>> rows;
    for (const auto& v : vecs) {
        std::vector<unsigned> row(index.size(), 0);
        for (const auto& [key, val] : v) row[index[key]] = val;
        rows.push_back(std::move(row));
    }
    return fp_rank(std::move(rows), K->characteristic()) == fs.size();
}

std::size_t fp_rank(std::vector<std::vector<unsigned>> rows, unsigned p) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        unsigned inv = inv_mod(rows[rank][col] % p, p);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            unsigned f = static_cast<unsigned>((static_cast<unsigned long long>(rows[r][col] % p) * inv) % p);
            if (f == 0) continue;
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = static_cast<unsigned>(
                    (rows[r][c] % p + static_cast<unsigned long long>(p - f) * (rows[rank][c] % p)) % p);
        }
        ++rank;
    }
    return rank;
}

std::optional<ResidueElement> additive_root(const ResidueElement& a, const ResidueElement& b) {
    if (a.is_zero()) return a.field()->zero();
    AdditiveSystem sys = additive_system(a, b);
    if (!sys.sol) return std::nullopt;
    return combine(sys, a.field(), sys.sol->particular);
}

bool irreducible_artinschreier_like(const ResidueElement& a, const ResidueElement& b) {
    const auto& K = a.field();
    require(same_field(K, b.field()), ErrorKind::DomainError, "residue fields differ");
    const unsigned p = K->characteristic();
    if (p <= 3) return !additive_root(a, b).has_value();
    require(K->is_finite(), ErrorKind::UnsupportedField,
            "irreducibility over rational function fields is supported only for p in {2,3}");
    const auto& F = *K->fq();
    UPoly f(p + 1, 0);
    f[0] = F.neg(a.constant_value());
    f[1] = b.constant_value();
    f[p] = 1;
    return rabin_prime_degree(f, F);
}

std::optional<std::vector<ResidueElement>> roots_in_field(const std::vector<ResidueElement>& coeffs_in) {
    std::vector<ResidueElement> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    require(!coeffs.empty(), ErrorKind::DomainError, "roots of the zero polynomial");
    const auto& K = coeffs[0].field();
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return std::vector<ResidueElement>{};
    ResidueElement lead_inv = coeffs.back().inverse();
    for (auto& c : coeffs) c = c * lead_inv;
    if (n == 1) return std::vector<ResidueElement>{-coeffs[0]};
    if (K->is_finite()) {
        std::vector<ResidueElement> roots;
        for (const auto& x : K->all_elements()) {
            ResidueElement acc = K->zero();
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
            if (acc.is_zero()) roots.push_back(x);
        }
        return roots;
    }
    const unsigned p = K->characteristic();
    if (n != p) return std::nullopt;
    for (std::size_t i = 2; i < n; ++i)
        if (!coeffs[i].is_zero()) return std::nullopt;
    AdditiveSystem sys = additive_system(-coeffs[0], coeffs[1]);
    if (!sys.sol) return std::vector<ResidueElement>{};
    std::vector<ResidueElement> roots;
    const auto& kernel = sys.sol->kernel;
    std::size_t total = 1;
    for (std::size_t i = 0; i < kernel.size(); ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<unsigned> y = sys.sol->particular;
        std::size_t c = code;
        for (const auto& kv : kernel) {
            unsigned m = static_cast<unsigned>(c % p);
            c /= p;
            for (std::size_t j = 0; j < y.size(); ++j) y[j] = (y[j] + m * kv[j]) % p;
        }
        roots.push_back(combine(sys, K, y));
    }
    return roots;
}

}  // namespace hdv
