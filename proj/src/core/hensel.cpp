#include "hdvlab/core/hensel.hpp"

#include "hdvlab/residue/residue_ops.hpp"

namespace hdv {

FieldElement hensel_root(const Poly& f_in, const FieldElement& a) {
    const ValuedField& k = *a.field();
    Poly f = poly_coerce(k, f_in);
    require(f.size() >= 2, ErrorKind::DomainError, "hensel_root: constant polynomial");
    for (const auto& c : f) {
        ValInfo vi = c.val_info();
        require(!vi.exact || vi.lower >= Value(0), ErrorKind::PreconditionViolated,
                "hensel_root: coefficients must be integral");
    }
    require(a.val_info().lower >= Value(0), ErrorKind::PreconditionViolated, "hensel_root: start must be integral");
    Poly df = poly_derivative(f);
    FieldElement fa = poly_eval(f, a);
    if (fa.is_zero()) return a;
    FieldElement dfa = poly_eval(df, a);
    ValInfo dv = dfa.val_info();
    require(dv.exact && !dv.lower.is_infinite(), ErrorKind::PreconditionViolated,
            "hensel_root: f'(a) vanishes");
    Value two_d = dv.lower + dv.lower;
    require(two_d < fa.val(), ErrorKind::PreconditionViolated,
            "hensel_root: need 2 v(f'(a)) < v(f(a)), have " + two_d.str() + " >= " + fa.val().str());
    FieldElement c = a;
    FieldElement fc = fa;
    FieldElement dfc = dfa;
    const int budget = 2 * k.precision() + 16;
    for (int step = 0; step < budget; ++step) {
        c = c - fc / dfc;
        fc = poly_eval(f, c);
        if (fc.is_zero()) return c;
        dfc = poly_eval(df, c);
    }
    fail(ErrorKind::InsufficientPrecision, "hensel_root: Newton iteration did not reach working precision");
}

ExtPtr lift_inertial(const std::vector<ResidueElement>& g, const FieldPtr& k) {
    require(g.size() >= 2 && g.size() <= 4, ErrorKind::UnsupportedField, "lift_inertial: degree must be 1, 2 or 3");
    require(g.back().is_one(), ErrorKind::DomainError, "lift_inertial: polynomial must be monic");
    const ResidueFieldPtr& kk = k->residue_field();
    for (const auto& c : g)
        require(same_field(c.field(), kk), ErrorKind::DomainError, "lift_inertial: coefficients outside the residue field");
    if (g.size() > 2) {
        auto roots = roots_in_field(g);
        require(roots.has_value(), ErrorKind::UnsupportedField, "lift_inertial: irreducibility undecidable here");
        require(roots->empty(), ErrorKind::NotIrreducible, "lift_inertial: polynomial has a root in the residue field");
        bool separable = false;
        for (std::size_t i = 1; i < g.size(); ++i)
            if (!g[i].scale_int(static_cast<long long>(i)).is_zero()) separable = true;
        require(separable, ErrorKind::NotSeparable, "lift_inertial: polynomial is inseparable");
    }
    Poly lifted;
    for (const auto& c : g) lifted.push_back(k->lift(c));
    lifted.back() = k->one();
    return ExtensionField::create(k, std::move(lifted));
}

}  // namespace hdv
