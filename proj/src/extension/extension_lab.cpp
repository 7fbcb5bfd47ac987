#include "hdvlab/extension/extension_lab.hpp"

#include "hdvlab/power/power_tools.hpp"
#include "hdvlab/residue/residue_ops.hpp"

namespace hdv {

namespace {

std::string residue_poly_str(const std::vector<ResidueElement>& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coef = c[i].is_one() && i > 0 ? "" : "(" + c[i].str() + ")";
        out += coef;
        if (i > 0) out += (coef.empty() ? "" : "*") + std::string("X") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool in_p_z(const Value& v, long long p) {
    const Rational& q = v.rational();
    return is_integer(q) && q.numerator() % p == 0;
}

void check_all(const std::vector<FactCheck>& facts) {
    for (const auto& f : facts) require(f.holds, ErrorKind::CheckFailed, f.name + " fails: " + f.detail);
}

}  // namespace

int extension_height(const ValuedField& k) {
    int h = 0;
    const ValuedField* cur = &k;
    while (cur->kind() == ValuedField::Kind::Extension || cur->kind() == ValuedField::Kind::Eisenstein) {
        ++h;
        cur = cur->base().get();
    }
    return h;
}

ExtPtr adjoin(const FieldPtr& base, const Poly& f_in, std::string label) {
    require(extension_height(*base) < kMaxTowerHeight, ErrorKind::TowerHeightExceeded,
            "adjoin: " + base->descriptor() + " already has " + std::to_string(kMaxTowerHeight) + " extension layers");
    Poly f = poly_coerce(*base, f_in);
    if (label.empty()) label = "ext(" + base->descriptor() + ", " + poly_str(f) + ")";
    ExtPtr l = is_eisenstein(f) ? EisensteinField::create(base, std::move(f), std::move(label))
                                : ExtensionField::create(base, std::move(f), std::move(label));
    if (l->degree() <= 3) l->ramification();
    return l;
}

ExtPtr kummer_adjoin(const FieldElement& lambda) {
    const FieldPtr& k = lambda.field();
    Poly f(k->p() + 1, k->zero());
    f[0] = -lambda;
    f.back() = k->one();
    return adjoin(k, f, "ext(" + k->descriptor() + ", X^" + std::to_string(k->p()) + " - (" + lambda.str() + "))");
}

FieldElement norm(const FieldElement& x) {
    const auto* ext = as_extension(*x.field());
    require(ext != nullptr, ErrorKind::DomainError, "norm: " + x.field()->descriptor() + " is not an extension");
    return ext->norm(x);
}

Value ext_val(const FieldElement& x) {
    const auto* ext = as_extension(*x.field());
    require(ext != nullptr, ErrorKind::DomainError, "ext_val: " + x.field()->descriptor() + " is not an extension");
    return ext->ext_val(x);
}

ExtClassification classify_ext(const ExtensionField& l) {
    const RamificationData& rd = l.ramification();
    ExtClassification c;
    c.kind = rd.kind;
    c.degree = l.degree();
    c.e = rd.e;
    c.f = rd.f;
    c.witness = rd.witness;
    c.witness_value = rd.witness_value;
    const ResidueFieldPtr& kk = l.base()->residue_field();
    switch (rd.kind) {
        case ExtClass::TotallyRamified:
            c.residue = kk->descriptor();
            break;
        case ExtClass::Inertial:
            c.residue = kk->is_finite() ? l.residue_field()->descriptor()
                                        : kk->descriptor() + "[X]/(" + residue_poly_str(rd.residue_minpoly) + ")";
            break;
        case ExtClass::InseparableResidue:
            c.residue_radicand = -rd.residue_minpoly[0];
            c.residue = kk->descriptor() + "((" + c.residue_radicand->str() + ")^(1/" + std::to_string(l.p()) + "))";
            break;
        case ExtClass::Mixed:
            c.residue = "undetermined";
            break;
    }
    c.defectless = c.e * c.f == c.degree;
    return c;
}

ExtClassification classify_deg_p_ext(const ExtensionField& l) {
    require(l.degree() == static_cast<int>(l.p()), ErrorKind::PreconditionViolated,
            "classify_deg_p_ext: degree " + std::to_string(l.degree()) + " is not p");
    ExtClassification c = classify_ext(l);
    require(c.kind != ExtClass::Mixed, ErrorKind::UnclassifiableAtPrecision,
            "classify_deg_p_ext: no decisive witness found for " + l.descriptor());
    require(c.defectless, ErrorKind::CheckFailed,
            "classify_deg_p_ext: e f = " + std::to_string(c.e * c.f) + " differs from p");
    return c;
}

Subfield rational_subfield(const FieldPtr& k) {
    require(k->characteristic() == 0, ErrorKind::WrongCharacteristic, "rational_subfield: characteristic 0 only");
    return {"Q", k->from_int(k->p())};
}

TransferReport eisenstein_transfer(const Poly& f_in, const FieldPtr& k, const Subfield& phi) {
    Poly f = poly_coerce(*k, f_in);
    const int n = static_cast<int>(f.size()) - 1;
    require(n >= 1 && f.back().identical(k->one()), ErrorKind::DomainError, "eisenstein_transfer: f must be monic");
    TransferReport out;
    out.phi = phi;
    Value vu = k->coerce(phi.uniformizer).val();
    require(vu > Value(0) && is_integer(vu.rational()), ErrorKind::DomainError,
            "eisenstein_transfer: bad uniformizer for " + phi.name);
    out.index = vu.rational().numerator();
    require(out.index % static_cast<long long>(k->p()) != 0, ErrorKind::IndexDivisible,
            "eisenstein_transfer: p divides the index " + std::to_string(out.index) + " of " + phi.name);
    // omega = v_K / index on Phi
    for (int i = 0; i < n; ++i) {
        ValInfo vi = f[i].val_info();
        if (i == 0) {
            require(vi.exact && vi.lower == Value(Rational(out.index)), ErrorKind::NotEisensteinOverK,
                    "eisenstein_transfer: constant term has omega value " + vi.lower.str() + " / " +
                        std::to_string(out.index) + ", not 1");
        } else {
            require(vi.lower > Value(0), ErrorKind::NotEisensteinOverK,
                    "eisenstein_transfer: coefficient of X^" + std::to_string(i) + " is a unit");
        }
    }
    out.eisenstein_over_k = is_eisenstein(f);
    std::string label = "ext(" + k->descriptor() + ", " + poly_str(f) + ")";
    out.field = adjoin(k, f, label);
    // the generic analysis decides the class from values alone
    ExtPtr generic = ExtensionField::create(k, f, label);
    out.cls = classify_ext(*generic);
    require(out.cls.kind == ExtClass::TotallyRamified && out.cls.e == n, ErrorKind::ClassificationMismatch,
            "eisenstein_transfer: " + label + " classified " + ext_class_name(out.cls.kind));
    return out;
}

FieldElement wp_reduce(const FieldElement& c_in) {
    const ValuedField& k = *c_in.field();
    require(k.characteristic() == k.p(), ErrorKind::WrongCharacteristic, "wp_reduce: characteristic p only");
    require(k.kind() == ValuedField::Kind::Laurent, ErrorKind::UnsupportedField,
            "wp_reduce: needs a Laurent series model, got " + k.descriptor());
    const long p = k.p();
    const FieldElement t = k.uniformizer();
    FieldElement c = c_in;
    while (true) {
        // the lowest negative term that is the leading part of some w^p - w
        const auto& s = c.as<SeriesRep>();
        std::optional<FieldElement> w;
        for (const auto& term : s.terms) {
            if (term.e >= 0) break;
            if (term.e % p != 0) continue;
            if (auto r = pth_power_root(term.c)) {
                w = k.lift(*r) * t.pow(term.e / p);
                break;
            }
        }
        if (!w) break;
        c = c - w->pow(p) + *w;
    }
    SeriesRep out;
    for (const auto& term : c.as<SeriesRep>().terms) {
        if (term.e > 0) break;
        if (term.e == 0) {
            // t k[[t]] lies in the image; the constant does iff X^p - X - c0 has a root
            if (additive_root(term.c, -term.c.field()->one())) break;
        }
        out.terms.push_back(term);
    }
    out.abs = kExact;
    return FieldElement(c_in.field(), out);
}

bool in_wp_image(const FieldElement& c) { return wp_reduce(c).is_exact_zero(); }

ExtPtr artin_schreier_adjoin(const FieldElement& c) {
    const FieldPtr& k = c.field();
    require(k->characteristic() == k->p(), ErrorKind::WrongCharacteristic,
            "artin_schreier_adjoin: characteristic p only");
    require(!in_wp_image(c), ErrorKind::PreconditionViolated,
            "artin_schreier_adjoin: " + c.str() + " lies in the image of w^p - w");
    Poly f(k->p() + 1, k->zero());
    f[0] = -c;
    f[1] = k->from_int(-1);
    f.back() = k->one();
    return adjoin(k, f, "ext(" + k->descriptor() + ", X^" + std::to_string(k->p()) + " - X - (" + c.str() + "))");
}

int artin_schreier_rank(const std::vector<FieldElement>& cs) {
    require(cs.size() <= 6, ErrorKind::DomainError, "artin_schreier_rank: at most 6 elements");
    if (cs.empty()) return 0;
    const FieldPtr& k = cs[0].field();
    const unsigned p = k->p();
    std::size_t total = 1;
    for (std::size_t i = 0; i < cs.size(); ++i) total *= p;
    std::size_t kernel = 1;
    for (std::size_t code = 1; code < total; ++code) {
        FieldElement sum = k->zero();
        std::size_t c = code;
        for (const auto& x : cs) {
            if (c % p) sum = sum + k->coerce(x) * static_cast<long long>(c % p);
            c /= p;
        }
        if (in_wp_image(sum)) ++kernel;
    }
    int dim = 0;
    for (std::size_t s = kernel; s > 1; s /= p) ++dim;
    return static_cast<int>(cs.size()) - dim;
}

namespace {

void finish_tower(AbelianTowerReport& r) {
    r.total_e = 1;
    for (const auto& s : r.steps) r.total_e *= s.cls.e;
    r.totally_ramified = !r.steps.empty() && r.total_e == r.degree;
}

}  // namespace

AbelianTowerReport kummer_tower(const std::vector<FieldElement>& lambdas, const CyclotomicContext& ctx) {
    AbelianTowerReport r;
    r.kind = "kummer";
    r.base = ctx.field;
    for (const auto& l : lambdas) r.generators.push_back(ctx.field->coerce(l));
    r.rank = kummer_rank(r.generators, ctx);
    r.degree = ipow(ctx.field->p(), r.rank);
    if (r.rank < static_cast<int>(r.generators.size())) {
        r.notes.push_back("generators are dependent modulo p-th powers; tower not built");
        return r;
    }
    FieldPtr cur = ctx.field;
    for (const auto& l : r.generators) {
        ExtPtr step = kummer_adjoin(cur->coerce(l));
        r.steps.push_back({step, step->generator(), classify_deg_p_ext(*step)});
        cur = step;
    }
    finish_tower(r);
    return r;
}

AbelianTowerReport artin_schreier_tower(const std::vector<FieldElement>& cs) {
    require(!cs.empty(), ErrorKind::DomainError, "artin_schreier_tower: no generators");
    AbelianTowerReport r;
    r.kind = "artin-schreier";
    r.base = cs[0].field();
    r.generators = cs;
    r.rank = artin_schreier_rank(cs);
    r.degree = ipow(r.base->p(), r.rank);
    if (r.rank < static_cast<int>(cs.size())) {
        r.notes.push_back("generators are dependent modulo w^p - w; tower not built");
        return r;
    }
    FieldPtr cur = r.base;
    for (const auto& c : cs) {
        Poly f(cur->p() + 1, cur->zero());
        f[0] = -cur->coerce(c);
        f[1] = cur->from_int(-1);
        f.back() = cur->one();
        ExtPtr step =
            adjoin(cur, f, "ext(" + cur->descriptor() + ", X^" + std::to_string(cur->p()) + " - X - (" + c.str() + "))");
        r.steps.push_back({step, step->generator(), classify_deg_p_ext(*step)});
        cur = step;
    }
    finish_tower(r);
    return r;
}

CyclotomicContext context_over(const FieldPtr& f, const CyclotomicContext& ctx) {
    CyclotomicContext c;
    c.base = f;
    c.field = f;
    c.epsilon = f->coerce(ctx.epsilon);
    return c;
}

Lemma34Report lemma_3_4_report(const FieldElement& xi_in, const CyclotomicContext& ctx) {
    const ValuedField& k = *ctx.base;
    const long long p = k.p();
    require(k.characteristic() == 0, ErrorKind::WrongCharacteristic, "lemma_3_4_element: characteristic 0 only");
    FieldElement xi = k.coerce(xi_in);
    const Rational bound = k.v_of_p().rational() / Rational(p - 1);
    Value v = xi.val();
    require(v > Value(0) && v < Value(bound), ErrorKind::PreconditionViolated,
            "lemma_3_4_element: v(xi) = " + v.str() + " outside (0, " + to_string(bound) + ")");
    const ValuedField& f = *ctx.field;
    Lemma34Report r;
    r.xi = xi;
    r.lambda = 1 + f.from_int(p) * (f.one() - ctx.epsilon) / f.coerce(xi);
    r.defect = albert_defect(r.lambda, ctx);
    PthPowerVerdict d = pth_root(r.defect, ctx);
    require(d.is_pth_power() && d.root, ErrorKind::CheckFailed,
            "lemma_3_4_element: phi(lambda) lambda^-s is not a p-th power (" + d.note + ")");
    r.defect_root = *d.root;
    r.lambda_power = is_pth_power(r.lambda, ctx) ? PthPowerVerdict::Outcome::IsPthPower
                                                 : PthPowerVerdict::Outcome::NotPthPower;
    return r;
}

FieldElement lemma_3_4_element(const FieldElement& xi, const CyclotomicContext& ctx) {
    return lemma_3_4_report(xi, ctx).lambda;
}

std::vector<FactCheck> cyclotomic_facts(const CyclotomicContext& ctx) {
    const ValuedField& f = *ctx.field;
    const long long p = f.p();
    require(f.characteristic() == 0, ErrorKind::WrongCharacteristic, "cyclotomic_facts: characteristic 0 only");
    const FieldElement one_minus = f.one() - ctx.epsilon;
    const Value vp = f.v_of_p();
    const Value vq = one_minus.pow(p).val();
    std::vector<FactCheck> out;
    for (long long n = 1; n <= 2 * p; ++n) {
        if (n % p == 0) continue;
        FieldElement s = f.zero();
        for (long long nu = 0; nu < n; ++nu) s = s + ctx.epsilon.pow(nu);
        FieldElement da = s.pow(p) - n;
        bool a_holds = da.is_zero() || da.val() >= vp;
        out.push_back({"sum_eps_pow_p n=" + std::to_string(n), a_holds,
                       "v = " + (da.is_zero() ? std::string("inf") : da.val().str()) + ", need >= " + vp.str()});
        FieldElement db = (f.one() - ctx.epsilon.pow(n)).pow(p) - one_minus.pow(p) * n;
        bool b_holds = val_greater(db, vq.rational());
        out.push_back({"one_minus_eps_n n=" + std::to_string(n), b_holds,
                       "v = " + (db.is_zero() ? std::string("inf") : db.val().str()) + ", need > " + vq.str()});
    }
    return out;
}

Lemma41Report lemma_4_1_family(const FieldElement& pi_in, const CyclotomicContext& ctx) {
    const ValuedField& k = *ctx.base;
    const long long p = k.p();
    require(k.characteristic() == 0, ErrorKind::WrongCharacteristic, "lemma_4_1_family: characteristic 0 only");
    FieldElement pi = k.coerce(pi_in);
    const Rational gp = gamma_prime(k);
    Value v = pi.val();
    require(v > Value(0) && v < Value(gp), ErrorKind::PreconditionViolated,
            "lemma_4_1_family: v(pi) = " + v.str() + " outside (0, " + to_string(gp) + ")");
    const ValuedField& f = *ctx.field;
    Lemma41Report r;
    r.pi = pi;
    const FieldElement c = (f.one() - ctx.epsilon).pow(p) / f.coerce(pi);
    r.lambda = 1 + c;
    r.lambda_bar = albert_average(r.lambda, ctx);
    FieldElement mc = c * static_cast<long long>(ctx.m);
    FieldElement lead = r.lambda_bar - 1;
    r.facts.push_back({"average_leading_term", val_greater(lead - mc, c.val().rational()),
                       "v(lambda_bar - 1 - m c) against v(c) = " + c.val().str()});
    r.facts.push_back({"average_value", lead.val() == mc.val(),
                       "v(lambda_bar - 1) = " + lead.val().str() + ", v(m c) = " + mc.val().str()});
    for (auto& fc : cyclotomic_facts(ctx)) r.facts.push_back(std::move(fc));
    check_all(r.facts);

    if (!in_p_z(v, p)) {
        r.expected = NormalityClass::Verdict::ANormal;
    } else {
        FieldElement pi1 = k.uniformizer().pow(v.rational().numerator() / p);
        FieldElement a = pi / pi1.pow(p);
        if (!pth_power_root(a.residue())) r.expected = NormalityClass::Verdict::BNormal;
    }
    r.cls = classify_normal(r.lambda_bar, false);
    if (r.expected)
        require(r.cls.verdict == *r.expected, ErrorKind::ClassificationMismatch,
                "lemma_4_1_family: lambda_bar is " + verdict_name(r.cls.verdict) + ", expected " +
                    verdict_name(*r.expected));
    r.extension = kummer_adjoin(r.lambda_bar);
    r.ext_cls = classify_deg_p_ext(*r.extension);
    if (r.cls.verdict == NormalityClass::Verdict::ANormal)
        require(r.ext_cls.kind == ExtClass::TotallyRamified, ErrorKind::ClassificationMismatch,
                "lemma_4_1_family: A-normal lambda_bar gave " + ext_class_name(r.ext_cls.kind));
    if (r.cls.verdict == NormalityClass::Verdict::BNormal)
        require(r.ext_cls.kind == ExtClass::InseparableResidue, ErrorKind::ClassificationMismatch,
                "lemma_4_1_family: B-normal lambda_bar gave " + ext_class_name(r.ext_cls.kind));
    return r;
}

Lemma44Report lemma_4_4_extension(const FieldElement& a_in) {
    const FieldPtr& k = a_in.field();
    const long long p = k->p();
    require(k->characteristic() == 0, ErrorKind::PreconditionViolated, "lemma_4_4_extension: characteristic 0 only");
    const Value vp = k->v_of_p();
    require(in_p_z(vp, p), ErrorKind::PreconditionViolated,
            "lemma_4_4_extension: v(p) = " + vp.str() + " is not in p v(K)");
    ValInfo va = a_in.val_info();
    require(va.exact && va.lower == Value(0), ErrorKind::PreconditionViolated, "lemma_4_4_extension: a must be a unit");
    const ResidueElement abar = a_in.residue();
    require(!pth_power_root(abar), ErrorKind::PreconditionViolated,
            "lemma_4_4_extension: residue " + abar.str() + " is a p-th power");
    Lemma44Report r;
    r.a = a_in;
    r.pi1 = k->uniformizer().pow(vp.rational().numerator() / p);
    CyclotomicContext ctx = make_cyclotomic(k);
    r.family = lemma_4_1_family(r.pi1.pow(p) * a_in, ctx);
    r.extension = r.family.extension;
    require(r.family.ext_cls.kind == ExtClass::InseparableResidue && r.family.ext_cls.residue_radicand,
            ErrorKind::ClassificationMismatch,
            "lemma_4_4_extension: extension is " + ext_class_name(r.family.ext_cls.kind));
    r.residue_radicand = *r.family.ext_cls.residue_radicand;
    require(!p_independent({r.residue_radicand, r.residue_radicand.field()->extend(abar)}), ErrorKind::CheckFailed,
            "lemma_4_4_extension: residue extension is not generated by a p-th root of " + abar.str());
    return r;
}

Lemma51Report lemma_5_1_tower(const FieldElement& pi_in, const std::vector<FieldElement>& alphas_in, int mu,
                              const CyclotomicContext& ctx) {
    const FieldPtr& f = ctx.field;
    const long long p = f->p();
    require(f->characteristic() == 0, ErrorKind::WrongCharacteristic, "lemma_5_1_tower: characteristic 0 only");
    require(mu >= 1 && static_cast<int>(alphas_in.size()) == mu, ErrorKind::PreconditionViolated,
            "lemma_5_1_tower: need mu >= 1 units alpha_1..alpha_mu");
    Lemma51Report r;
    FieldElement pi = f->coerce(pi_in);
    const Value vpi = pi.val();
    const Value vp = f->v_of_p();
    const Rational gp = gamma_prime(*f);
    require(!in_p_z(vpi, p), ErrorKind::PreconditionViolated, "lemma_5_1_tower: v(pi) = " + vpi.str() + " is in p v(K)");
    require(vpi > vp && vpi < Value(gp), ErrorKind::PreconditionViolated,
            "lemma_5_1_tower: v(pi) = " + vpi.str() + " outside (" + vp.str() + ", " + to_string(gp) + ")");
    std::vector<FieldElement> alphas;
    std::vector<ResidueElement> res;
    for (const auto& a : alphas_in) {
        FieldElement x = f->coerce(a);
        ValInfo vi = x.val_info();
        require(vi.exact && vi.lower == Value(0), ErrorKind::PreconditionViolated, "lemma_5_1_tower: alpha not a unit");
        alphas.push_back(x);
        res.push_back(x.residue());
    }
    require(f_linear_independent(res), ErrorKind::PreconditionViolated,
            "lemma_5_1_tower: residues of the alphas are linearly dependent over F_p");
    const long long pmu = ipow(p, mu);
    if (!alphas[0].identical(f->one())) {
        // pi alpha_j^(p^mu) = (pi alpha_1^(p^mu)) (alpha_j / alpha_1)^(p^mu)
        pi = pi * alphas[0].pow(pmu);
        FieldElement inv = alphas[0].inverse();
        for (auto& a : alphas) a = a * inv;
        alphas[0] = f->one();
        r.notes.push_back("rescaled so that alpha_1 = 1");
    }
    r.pi = pi;
    r.alphas = alphas;
    for (const auto& a : alphas) r.lambdas.push_back(1 + pi * a.pow(pmu));

    r.tower = kummer_tower(r.lambdas, ctx);
    require(r.tower.rank == mu, ErrorKind::CheckFailed,
            "lemma_5_1_tower: Kummer rank " + std::to_string(r.tower.rank) + " differs from mu");
    require(r.tower.totally_ramified, ErrorKind::CheckFailed,
            "lemma_5_1_tower: tower has e = " + std::to_string(r.tower.total_e) + " < " + std::to_string(r.tower.degree));
    if (ctx.trivial()) r.notes.push_back("Galois with elementary abelian group: epsilon in K and rank = mu");

    const FieldElement one_minus = f->one() - ctx.epsilon;
    r.gamma = (one_minus.pow(p) / pi).val().rational();
    const ExtPtr& l1 = r.tower.steps[0].field;
    const FieldElement eta1 = l1->generator() - 1;
    r.eta1_value = l1->ext_val(eta1);
    r.eta1_expected = Value(vp.rational() / Rational(p - 1) - r.gamma / Rational(p));
    r.notes.push_back("delta taken as gamma = v((1 - eps)^p / pi)");
    require(r.eta1_value == r.eta1_expected, ErrorKind::CheckFailed,
            "lemma_5_1_tower: v(eta_1) = " + r.eta1_value.str() + ", expected " + r.eta1_expected.str());

    if (mu >= 2) {
        CyclotomicContext c1 = context_over(l1, ctx);
        const FieldElement om = l1->coerce(one_minus);
        const FieldElement xi1 = om / eta1;
        const Value xi1_value = l1->ext_val(xi1);
        require(xi1_value == Value(r.gamma / Rational(p)), ErrorKind::CheckFailed,
                "lemma_5_1_tower: v(xi_1) = " + xi1_value.str() + ", expected gamma/p");
        const long long pmu1 = pmu / p;
        for (int j = 1; j < mu; ++j) {
            DescentCheck d;
            d.j = j + 1;
            FieldElement a = l1->coerce(alphas[static_cast<std::size_t>(j)]);
            d.alpha1 = a - a.pow(p);
            d.xi1 = xi1;
            d.xi1_value = xi1_value;
            d.lambda1 = 1 + om.pow(p - 1) * eta1 * d.alpha1.pow(pmu1);
            d.same_coset = same_coset(d.lambda1, l1->coerce(r.lambdas[static_cast<std::size_t>(j)]), c1);
            require(d.same_coset, ErrorKind::DescentMismatch,
                    "lemma_5_1_tower: lambda_{1," + std::to_string(d.j) + "} and lambda_" + std::to_string(d.j) +
                        " differ modulo p-th powers over L_1");
            r.descent.push_back(d);
        }
        if (mu == 2) {
            NormalityClass nc = classify_normal(r.descent[0].lambda1, false);
            r.level1_verdict = nc.verdict;
            require(nc.verdict == NormalityClass::Verdict::ANormal, ErrorKind::DescentMismatch,
                    "lemma_5_1_tower: lambda_{1,2} is " + verdict_name(nc.verdict) + " over L_1");
        }
    }
    return r;
}

TheoremFamilyReport theorem_family(const FieldElement& xi_in, const std::vector<FieldElement>& alphas, int mu,
                                   const CyclotomicContext& ctx) {
    const ValuedField& k = *ctx.base;
    const long long p = k.p();
    require(k.characteristic() == 0, ErrorKind::WrongCharacteristic, "theorem_family: characteristic 0 only");
    require(mu >= 1 && static_cast<int>(alphas.size()) == mu, ErrorKind::PreconditionViolated,
            "theorem_family: need mu >= 1 units alpha_1..alpha_mu");
    const Value vp = k.v_of_p();
    require(in_p_z(vp, p), ErrorKind::PreconditionViolated, "theorem_family: v(p) = " + vp.str() + " is not in p v(K)");
    FieldElement xi = k.coerce(xi_in);
    const Value vxi = xi.val();
    require(vxi > Value(0) && vxi <= Value(vp.rational() / Rational(p)), ErrorKind::PreconditionViolated,
            "theorem_family: v(xi) = " + vxi.str() + " outside (0, v(p)/p]");
    require(!in_p_z(vxi, p), ErrorKind::PreconditionViolated, "theorem_family: v(xi) = " + vxi.str() + " is in p v(K)");
    std::vector<ResidueElement> res;
    for (const auto& a : alphas) res.push_back(k.coerce(a).residue());
    require(f_linear_independent(res), ErrorKind::PreconditionViolated,
            "theorem_family: residues of the alphas are linearly dependent over F_p");

    const ValuedField& f = *ctx.field;
    const long long pmu = ipow(p, mu);
    TheoremFamilyReport r;
    r.xi = xi;
    const FieldElement scale = f.from_int(p) * (f.one() - ctx.epsilon) / f.coerce(xi);
    for (const auto& a0 : alphas) {
        FieldElement a = k.coerce(a0);
        FieldElement beta = 1 + scale * f.coerce(a).pow(pmu);
        FieldElement lam = lemma_3_4_element(xi * a.pow(-pmu), ctx);
        require(agrees_to_precision(beta, lam), ErrorKind::CheckFailed,
                "theorem_family: beta differs from lemma_3_4_element");
        bool member = albert_member(beta, ctx);
        require(member, ErrorKind::CheckFailed, "theorem_family: beta fails the Albert conditions");
        r.betas.push_back(beta);
        r.albert.push_back(member);
    }
    r.tower = lemma_5_1_tower(scale, alphas, mu, ctx);
    require(r.tower.tower.degree == pmu && r.tower.tower.totally_ramified, ErrorKind::CheckFailed,
            "theorem_family: tower is not TR of degree p^mu");
    return r;
}

}  // namespace hdv
