#ifndef HDVLAB_CORE_FIELD_HPP
#define HDVLAB_CORE_FIELD_HPP

#include "hdvlab/errors.hpp"
#include "hdvlab/residue/residue_field.hpp"
#include "hdvlab/value.hpp"

#include <gmpxx.h>

#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hdv {

class ValuedField;
class FieldElement;
using FieldPtr = std::shared_ptr<const ValuedField>;

/// Absolute precision of an exact element.
constexpr long kExact = std::numeric_limits<long>::max() / 8;

/// Known information about v(x): exact means v(x) == lower, otherwise only
/// v(x) >= lower is known (x vanishes to working precision).
struct ValInfo {
    Value lower;
    bool exact = true;
};

/// x = unit * p^val + O(p^abs), 0 < unit < p^(abs - val), p does not divide unit.
/// unit == 0 is a zero: exact when abs == kExact.
struct PadicRep {
    mpz_class unit;
    long val = 0;
    long abs = kExact;
};

struct SeriesTerm {
    long e;
    ResidueElement c;
};

/// x = sum c t^e + O(t^abs) over the listed terms (increasing e, all e < abs,
/// all c nonzero).  No terms is a zero: exact when abs == kExact.
struct SeriesRep {
    std::vector<SeriesTerm> terms;
    long abs = kExact;
};

/// Coefficients in the base field with respect to 1, theta, ..., theta^(n-1).
struct VecRep {
    std::vector<FieldElement> c;
};

struct GaussTerm;
/// num/den, polynomials in the Gauss variables with base coefficients, kept
/// in decreasing lex order of exponents.  den has Gauss value 0.
/// pruned is a lower bound for numerator terms dropped as zero to precision.
struct FracRep {
    std::vector<GaussTerm> num;
    std::vector<GaussTerm> den;
    Value pruned = Value::infinity();
};

using Rep = std::variant<PadicRep, SeriesRep, VecRep, FracRep>;

/// Element of a ValuedField; value semantics.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(FieldPtr f, Rep r) : f_(std::move(f)), r_(std::move(r)) {}

    const FieldPtr& field() const { return f_; }
    const Rep& rep() const { return r_; }
    template <class T>
    const T& as() const {
        return std::get<T>(r_);
    }

    ValInfo val_info() const;
    /// v(x) in the normalized value group; +inf for an exact zero.
    /// Throws InsufficientPrecision when x vanishes to working precision.
    Value val() const;
    /// Zero to working precision.
    bool is_zero() const { return !val_info().exact || val_info().lower.is_infinite(); }
    bool is_exact_zero() const;
    ResidueElement residue() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator+(const FieldElement& a, long long n);
    friend FieldElement operator-(const FieldElement& a, long long n);
    friend FieldElement operator*(const FieldElement& a, long long n);
    friend FieldElement operator+(long long n, const FieldElement& a) { return a + n; }
    friend FieldElement operator-(long long n, const FieldElement& a) { return -(a - n); }
    friend FieldElement operator*(long long n, const FieldElement& a) { return a * n; }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    /// Representation-level identity (same digits, same precision).
    bool identical(const FieldElement& o) const;

    std::string str() const;

   private:
    FieldPtr f_;
    Rep r_;
};

struct GaussTerm {
    std::vector<int> e;
    FieldElement c;
};

/// Polynomials over a field, coefficients low to high.
using Poly = std::vector<FieldElement>;

/// Abstract HDV field model.  Fields are immutable; the ramification data of
/// extension fields is computed lazily under a once-flag.
class ValuedField : public std::enable_shared_from_this<ValuedField> {
   public:
    enum class Kind { Padic, Laurent, Eisenstein, Gauss, Extension };

    virtual ~ValuedField() = default;
    virtual Kind kind() const = 0;
    unsigned p() const { return p_; }
    /// 0 or p.
    unsigned characteristic() const { return char_; }
    int precision() const { return prec_; }
    const FieldPtr& base() const { return base_; }
    int tower_height() const { return base_ ? base_->tower_height() + 1 : 0; }
    FieldPtr self() const { return shared_from_this(); }

    virtual ResidueFieldPtr residue_field() const = 0;
    virtual Value v_of_p() const = 0;
    virtual std::string descriptor() const = 0;
    virtual FieldElement uniformizer() const = 0;
    /// Some lift of a residue to a unit (or zero).
    virtual FieldElement lift(const ResidueElement& r) const = 0;

    FieldElement zero() const;
    FieldElement one() const { return from_int(1); }
    virtual FieldElement from_int(long long n) const;
    virtual FieldElement from_mpz(const mpz_class& n) const;
    /// Image of an element of this field or of any field below it in the tower.
    FieldElement coerce(const FieldElement& x) const;
    bool contains(const ValuedField& sub) const;
    /// The embedding of the immediate base.
    virtual FieldElement embed(const FieldElement& b) const;

    // Arithmetic on elements of this field.
    virtual FieldElement add(const FieldElement& a, const FieldElement& b) const = 0;
    virtual FieldElement neg(const FieldElement& a) const = 0;
    virtual FieldElement mul(const FieldElement& a, const FieldElement& b) const = 0;
    virtual FieldElement inv(const FieldElement& a) const = 0;
    virtual ValInfo val_info(const FieldElement& a) const = 0;
    virtual ResidueElement residue(const FieldElement& a) const = 0;
    virtual bool is_exact_zero(const FieldElement& a) const = 0;
    virtual bool identical(const FieldElement& a, const FieldElement& b) const = 0;
    virtual std::string str(const FieldElement& a) const = 0;

    /// Identifiers the element parser resolves in this field (t, th, x, ...).
    virtual bool resolve_symbol(const std::string& name, FieldElement& out) const;

   protected:
    ValuedField(unsigned p, unsigned characteristic, int precision, FieldPtr base)
        : p_(p), char_(characteristic), prec_(precision), base_(std::move(base)) {}
    FieldElement make(Rep r) const { return FieldElement(self(), std::move(r)); }

   private:
    unsigned p_;
    unsigned char_;
    int prec_;
    FieldPtr base_;
};

constexpr int kDefaultPrecision = 64;

FieldPtr make_padic(unsigned p, int precision = kDefaultPrecision);
FieldPtr make_laurent(ResidueFieldPtr k, int precision = kDefaultPrecision);
FieldPtr make_gauss(FieldPtr base, std::vector<std::string> vars);

Poly poly_scale(const Poly& f, const FieldElement& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& f);
FieldElement poly_eval(const Poly& f, const FieldElement& x);
Poly poly_coerce(const ValuedField& k, const Poly& f);
std::string poly_str(const Poly& f, const std::string& var = "X");

/// Valuation comparison helpers; each throws InsufficientPrecision when the
/// answer is not determined at working precision.
bool val_greater(const FieldElement& x, const Rational& gamma);

}  // namespace hdv

#endif  // HDVLAB_CORE_FIELD_HPP
