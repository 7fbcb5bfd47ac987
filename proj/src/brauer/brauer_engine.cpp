#include "hdvlab/brauer/brauer_engine.hpp"

#include "hdvlab/core/hensel.hpp"
#include "hdvlab/residue/residue_ops.hpp"

#include <random>

namespace hdv {

namespace {

long long ipow(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

bool only_ends(const Poly& f, std::size_t keep) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        if (i != keep && !f[i].is_zero()) return false;
    return true;
}

bool is_kummer_shape(const Poly& f) { return only_ends(f, 0); }

bool is_as_shape(const Poly& f) {
    const FieldPtr& k = f[0].field();
    return k->characteristic() == k->p() && only_ends(f, 1) && (f[1] + 1).is_zero();
}

bool cyclic_root(const ExtensionField& l, const FieldElement& s) {
    const Poly fl = poly_coerce(l, l.modulus());
    return poly_eval(fl, s).is_zero() && !(s - l.generator()).is_zero();
}

/// Generator of the degree-p factor as lambda of X^p - lambda or c of
/// X^p - X - c, after completing the square when p = 2.
struct Generator {
    std::string kind;
    FieldElement value;
};

Generator tower_generator(const ExtensionField& l) {
    const Poly& f = l.modulus();
    const FieldPtr& k = l.base();
    if (is_kummer_shape(f)) return {"kummer", -f[0]};
    if (is_as_shape(f)) return {"artin-schreier", -f[0]};
    if (k->p() == 2 && k->characteristic() == 0) return {"kummer", f[1] * f[1] - 4 * f[0]};
    // X^2 + bX + c, b != 0, is Y^2 + Y + c/b^2 under X = bY
    if (k->p() == 2) return {"artin-schreier", f[0] / (f[1] * f[1])};
    throw Error(ErrorKind::NotCyclicDetectable, "no Kummer or Artin-Schreier generator for " + l.descriptor());
}

std::string residue_algebra_statement(const std::vector<ResidueElement>& rs, unsigned p) {
    std::string out = "root field over the residue field of";
    for (std::size_t i = 0; i < rs.size(); ++i)
        out += (i ? ", X^" : " X^") + std::to_string(p) + " - (" + rs[i].str() + ")";
    return out;
}

void add_check(DivisionCertificate& c, std::string name, bool holds, std::string detail) {
    if (!holds && c.failure.empty()) c.failure = name + ": " + detail;
    c.checks.push_back({std::move(name), holds, std::move(detail)});
}

void unit_checks(DivisionCertificate& c, const std::string& tag, const std::vector<FieldElement>& xs) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
        ValInfo vi = xs[j].val_info();
        bool unit = vi.exact && vi.lower == Value(0);
        add_check(c, "unit " + tag + std::to_string(j + 1), unit,
                  "v = " + (vi.exact ? vi.lower.str() : ">= " + vi.lower.str()));
        if (unit) c.residues.push_back(xs[j].residue());
    }
}

}  // namespace

FieldElement CyclicAlgebra::apply(const FieldElement& x) const {
    const FieldElement y = field->coerce(x);
    const auto& c = field->coords(y);
    FieldElement r = field->zero();
    for (std::size_t i = c.size(); i-- > 0;) r = r * sigma_theta + field->embed(c[i]);
    return r;
}

CyclicAlgebra make_cyclic(const ExtPtr& l, const FieldElement& a) {
    const FieldPtr& k = l->base();
    const unsigned p = k->p();
    require(l->degree() == static_cast<int>(p), ErrorKind::PreconditionViolated,
            "make_cyclic: " + l->descriptor() + " has degree " + std::to_string(l->degree()));
    CyclicAlgebra c;
    c.field = l;
    c.slot = k->coerce(a);
    require(!c.slot.is_zero(), ErrorKind::PreconditionViolated, "make_cyclic: slot element is zero");
    const Poly& f = l->modulus();
    const FieldElement th = l->generator();
    const bool inertial = l->ramification().kind == ExtClass::Inertial;
    if (is_as_shape(f)) {
        c.action = "th -> th + 1";
        c.sigma_theta = th + 1;
    } else if (is_kummer_shape(f) && p == 2) {
        c.action = inertial ? "frobenius lift th -> -th" : "th -> -th";
        c.sigma_theta = -th;
    } else if (is_kummer_shape(f) && k->characteristic() == 0 && make_cyclotomic(k).trivial()) {
        c.action = "th -> eps th";
        c.sigma_theta = l->embed(make_cyclotomic(k).epsilon) * th;
    } else if (p == 2) {
        c.action = inertial ? "frobenius lift th -> -f1 - th" : "th -> -f1 - th";
        FieldElement s = -l->embed(f[1]) - th;
        if (!poly_eval(poly_coerce(*l, f), s).is_zero()) {
            try {
                s = hensel_root(poly_coerce(*l, f), s);
            } catch (const Error&) {
            }
        }
        c.sigma_theta = s;
    } else {
        throw Error(ErrorKind::NotCyclicDetectable, "make_cyclic: no second root of " + poly_str(f) + " found in " +
                                                         l->descriptor());
    }
    require(cyclic_root(*l, c.sigma_theta), ErrorKind::NotCyclicDetectable,
            "make_cyclic: " + c.sigma_theta.str() + " is not a second root of " + poly_str(f));
    return c;
}

TensorAlgebra tensor(std::vector<CyclicAlgebra> factors) {
    require(!factors.empty(), ErrorKind::DomainError, "tensor: no factors");
    TensorAlgebra t;
    const FieldPtr k = factors.front().base();
    for (const auto& f : factors) {
        require(f.base()->descriptor() == k->descriptor(), ErrorKind::PreconditionViolated,
                "tensor: factor over " + f.base()->descriptor() + ", expected " + k->descriptor());
        t.degree *= f.degree();
    }
    t.exponent = k->p();
    t.factors = std::move(factors);
    return t;
}

DivisionCertificate assess_division(const TensorAlgebra& d) {
    DivisionCertificate c;
    const FieldPtr k = d.base();
    const unsigned p = k->p();
    const long long mu = static_cast<long long>(d.factors.size());
    c.field = k->descriptor();
    c.degree = d.degree;
    c.exponent = d.exponent;

    for (std::size_t j = 0; j < d.factors.size(); ++j) {
        const auto& a = d.factors[j];
        add_check(c, "cyclic factor " + std::to_string(j + 1), a.degree() == static_cast<int>(p) && cyclic_root(*a.field, a.sigma_theta),
                  a.field->descriptor() + " with " + a.action);
    }
    if (!c.failure.empty()) return c;

    try {
        std::vector<Generator> gens;
        for (const auto& a : d.factors) gens.push_back(tower_generator(*a.field));
        bool same_kind = true;
        for (const auto& g : gens) same_kind = same_kind && g.kind == gens.front().kind;
        add_check(c, "generator shape", same_kind, "all factors " + gens.front().kind);
        if (same_kind) {
            std::vector<FieldElement> vals;
            for (const auto& g : gens) vals.push_back(g.value);
            if (gens.front().kind == "artin-schreier") {
                c.tower = artin_schreier_tower(vals);
            } else {
                CyclotomicContext ctx = make_cyclotomic(k);
                add_check(c, "roots of unity", ctx.trivial(), "a primitive p-th root of unity lies in K");
                if (ctx.trivial()) c.tower = kummer_tower(vals, ctx);
            }
        }
    } catch (const Error& e) {
        add_check(c, "tower", false, e.what());
    }
    if (c.tower) {
        add_check(c, "tower rank", c.tower->rank == mu,
                  "rank " + std::to_string(c.tower->rank) + " of " + std::to_string(mu) + " generators");
        add_check(c, "totally ramified", c.tower->totally_ramified,
                  "e = " + std::to_string(c.tower->total_e) + ", degree " + std::to_string(c.tower->degree));
        c.ramification = c.tower->total_e;
    }

    std::vector<FieldElement> slots;
    for (const auto& a : d.factors) slots.push_back(a.slot);
    unit_checks(c, "a", slots);
    if (c.residues.size() == slots.size()) {
        c.p_independent = p_independent(c.residues);
        add_check(c, "p-independent residues", c.p_independent, std::to_string(mu) + " residues");
    }
    if (!c.failure.empty()) return c;

    c.residue_degree = ipow(p, mu);
    c.residue_algebra = residue_algebra_statement(c.residues, p);
    add_check(c, "degree", d.degree == ipow(p, mu), std::to_string(d.degree));
    add_check(c, "defectless", d.degree * d.degree == c.residue_degree * c.ramification,
              std::to_string(d.degree) + "^2 = " + std::to_string(c.residue_degree) + " * " +
                  std::to_string(c.ramification));
    add_check(c, "exponent", d.exponent == p, "factors of degree p");
    c.division = c.failure.empty();
    if (c.division)
        c.provenance.push_back(
            "criterion verified: unit slots with p-independent residues over a totally ramified abelian compositum");
    return c;
}

DivisionCertificate certify_division(const TensorAlgebra& d) {
    DivisionCertificate c = assess_division(d);
    require(c.division, ErrorKind::CheckFailed, "criterion inapplicable: " + c.failure);
    return c;
}

NormSample norm_witness_sample(const ExtensionField& l, const FieldElement& a_in, int trials, std::uint64_t seed) {
    NormSample s;
    if (trials <= 0) return s;
    const FieldPtr& k = l.base();
    const FieldElement a = k->coerce(a_in);
    const ResidueFieldPtr rk = k->residue_field();
    const int n = l.degree();
    const FieldElement pi = k->uniformizer();
    std::mt19937_64 rng(seed);
    auto random_residue = [&] {
        if (rk->is_finite()) {
            auto all = rk->all_elements();
            return all[rng() % all.size()];
        }
        ResidueElement r = rk->from_int(static_cast<long long>(rng() % rk->characteristic()));
        for (int i = 0; i < rk->nvars(); ++i)
            r += rk->variable(i).scale_int(static_cast<long long>(rng() % rk->characteristic()));
        return r;
    };
    const int basic = (1 << n) - 1;
    for (int t = 0; t < trials; ++t) {
        std::vector<FieldElement> c(n, k->zero());
        if (t < basic) {
            for (int i = 0; i < n; ++i)
                if ((t + 1) >> i & 1) c[i] = k->one();
        } else {
            for (auto& x : c) x = k->lift(random_residue()) * pi.pow(static_cast<long long>(rng() % 3) - 1);
        }
        FieldElement d = l.from_coeffs(c);
        // an all-zero draw is redrawn
        if (d.is_zero()) {
            --t;
            continue;
        }
        ++s.trials;
        FieldElement gap = l.norm(d) - a;
        if (gap.is_zero()) {
            ++s.hits;
            s.witnesses.push_back(d);
        } else {
            s.min_gap = std::min(s.min_gap, gap.val());
        }
    }
    return s;
}

std::pair<TensorAlgebra, DivisionCertificate> build_w_mu(const FieldPtr& k, const std::vector<FieldElement>& cs_in,
                                                         const std::vector<FieldElement>& bs_in, int mu) {
    require(k->characteristic() == 0, ErrorKind::PreconditionViolated, "build_w_mu: characteristic 0 only");
    const long long p = k->p();
    const Rational vp = k->v_of_p().rational();
    require(is_integer(vp) && vp.numerator() % p == 0, ErrorKind::PreconditionViolated,
            "build_w_mu: v(p) = " + to_string(vp) + " is not in p v(K)");
    require(mu >= 1 && static_cast<int>(cs_in.size()) == mu && static_cast<int>(bs_in.size()) == mu,
            ErrorKind::PreconditionViolated, "build_w_mu: need mu elements in each of cs and bs");
    std::vector<FieldElement> all;
    for (const auto& x : cs_in) all.push_back(k->coerce(x));
    for (const auto& x : bs_in) all.push_back(k->coerce(x));

    DivisionCertificate c;
    c.field = k->descriptor();
    unit_checks(c, "", all);
    require(c.failure.empty(), ErrorKind::PreconditionViolated, "build_w_mu: " + c.failure);
    c.p_independent = p_independent(c.residues);
    require(c.p_independent, ErrorKind::PreconditionViolated,
            "build_w_mu: residues of cs and bs are not jointly p-independent");
    add_check(c, "jointly p-independent residues", true, std::to_string(2 * mu) + " residues");

    std::vector<CyclicAlgebra> vs;
    for (int j = 0; j < mu; ++j) {
        Lemma44Report r = lemma_4_4_extension(all[j]);
        add_check(c, "residue root extension " + std::to_string(j + 1),
                  r.extension->ramification().kind == ExtClass::InseparableResidue,
                  "residue field gains a p-th root of " + r.residue_radicand.str());
        vs.push_back(make_cyclic(r.extension, all[mu + j]));
    }
    TensorAlgebra w = tensor(std::move(vs));

    c.degree = w.degree;
    c.exponent = w.exponent;
    c.residue_degree = ipow(p, 2 * mu);
    c.ramification = 1;
    c.residue_algebra = residue_algebra_statement(c.residues, static_cast<unsigned>(p));
    add_check(c, "defectless", w.degree * w.degree == c.residue_degree * c.ramification,
              std::to_string(w.degree) + "^2 = " + std::to_string(c.residue_degree) + " * 1");
    require(c.failure.empty(), ErrorKind::CheckFailed, "build_w_mu: " + c.failure);
    c.division = true;
    c.trusted_external = true;
    c.provenance.push_back("trusted external: [Mo] Theorem 1");
    return {std::move(w), std::move(c)};
}

}  // namespace hdv
