#ifndef HDVLAB_CORE_EXTENSION_FIELD_HPP
#define HDVLAB_CORE_EXTENSION_FIELD_HPP

#include "hdvlab/core/field.hpp"

#include <mutex>
#include <optional>

namespace hdv {

enum class ExtClass { TotallyRamified, Inertial, InseparableResidue, Mixed };

std::string ext_class_name(ExtClass c);

struct RamificationData {
    ExtClass kind = ExtClass::Mixed;
    int e = 1;
    int f = 1;
    /// Element whose value or residue decides the class: of value a/n with
    /// gcd(a, n) = 1 when totally ramified, otherwise a unit whose reduced
    /// characteristic polynomial is residue_minpoly.
    FieldElement witness;
    /// ext_val of the witness.
    Value witness_value;
    std::vector<ResidueElement> residue_minpoly;
};

class ExtensionField;
using ExtPtr = std::shared_ptr<const ExtensionField>;

/// L = K[X]/(f) for a monic f of degree n over K.  Elements are coefficient
/// vectors in 1, th, ..., th^(n-1).  The valuation extends v_K via
/// v_L(x) = e * v_K(N(x)) / n with e found by the lazy ramification analysis.
class ExtensionField : public ValuedField {
   public:
    /// Checks the shape only (monic, degree >= 1, coefficients in K, constant
    /// term nonzero when n > 1).  Irreducibility is established lazily by
    /// ramification(), which throws NotIrreducible when it sees a splitting.
    static ExtPtr create(FieldPtr base, Poly f, std::string label = {});

    Kind kind() const override { return Kind::Extension; }
    int degree() const { return static_cast<int>(f_.size()) - 1; }
    const Poly& modulus() const { return f_; }
    const std::string& generator_name() const { return gen_; }
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<FieldElement> c) const;
    /// Coordinates in the power basis.
    const std::vector<FieldElement>& coords(const FieldElement& x) const { return x.as<VecRep>().c; }
    /// Whether every coordinate beyond the first is an exact zero.
    bool in_base(const FieldElement& x) const;

    FieldElement norm(const FieldElement& x) const;
    FieldElement trace(const FieldElement& x) const;
    /// Monic characteristic polynomial over K, low to high.
    Poly charpoly(const FieldElement& x) const;
    /// v_K(N(x)) / n in the normalized value group of K.
    Value ext_val(const FieldElement& x) const;
    ValInfo ext_val_info(const FieldElement& x) const;

    /// Ramification class; computed once.  Throws UnclassifiableAtPrecision
    /// when the witness search does not settle at working precision.
    const RamificationData& ramification() const;
    int ramification_index() const { return ramification().e; }

    /// For totally ramified and inseparable-residue extensions of degree p:
    /// the class of residue(x)^p in the residue field of K.
    ResidueElement residue_pth_power(const FieldElement& x) const;

    ResidueFieldPtr residue_field() const override;
    Value v_of_p() const override;
    std::string descriptor() const override { return label_; }
    FieldElement uniformizer() const override;
    FieldElement lift(const ResidueElement& r) const override;
    FieldElement embed(const FieldElement& b) const override;

    FieldElement add(const FieldElement& a, const FieldElement& b) const override;
    FieldElement neg(const FieldElement& a) const override;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const override;
    FieldElement inv(const FieldElement& a) const override;
    ValInfo val_info(const FieldElement& a) const override;
    ResidueElement residue(const FieldElement& a) const override;
    bool is_exact_zero(const FieldElement& a) const override;
    bool identical(const FieldElement& a, const FieldElement& b) const override;
    std::string str(const FieldElement& a) const override;
    bool resolve_symbol(const std::string& name, FieldElement& out) const override;

   protected:
    ExtensionField(FieldPtr base, Poly f, std::string label);
    /// Matrix of multiplication by x: column j holds the coordinates of x th^j.
    std::vector<std::vector<FieldElement>> mult_matrix(const FieldElement& x) const;
    virtual RamificationData analyse() const;

   private:
    /// Inertial over a prime finite residue field.
    bool inertial_finite() const;
    /// Coordinates of x in the witness basis 1, u, ..., u^(n-1).
    std::vector<FieldElement> witness_coords(const FieldElement& x) const;
    /// Root of the reduced witness polynomial that u maps to.
    FiniteField::Elem witness_residue() const;

   private:
    Poly f_;
    std::string gen_;
    std::string label_;
    mutable std::once_flag once_;
    mutable std::optional<RamificationData> ram_;
};

/// K[X]/(f) with f Eisenstein: totally ramified, uniformizer th, valuation
/// read off the coordinates directly.
class EisensteinField final : public ExtensionField {
   public:
    static ExtPtr create(FieldPtr base, Poly f, std::string label = {});
    Kind kind() const override { return Kind::Eisenstein; }
    ValInfo val_info(const FieldElement& a) const override;
    ResidueElement residue(const FieldElement& a) const override;
    FieldElement uniformizer() const override { return generator(); }

   protected:
    RamificationData analyse() const override;

   private:
    EisensteinField(FieldPtr base, Poly f, std::string label) : ExtensionField(std::move(base), std::move(f), std::move(label)) {}
};

/// Whether f is monic Eisenstein over its coefficient field.
bool is_eisenstein(const Poly& f);

/// The extension field of x's field, if it is one.
const ExtensionField* as_extension(const ValuedField& k);

/// Determinant by expansion with memoized minors; no divisions.
FieldElement determinant(const std::vector<std::vector<FieldElement>>& m);

}  // namespace hdv

#endif  // HDVLAB_CORE_EXTENSION_FIELD_HPP
