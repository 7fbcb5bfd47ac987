#ifndef HDVLAB_RESIDUE_RESIDUE_FIELD_HPP
#define HDVLAB_RESIDUE_RESIDUE_FIELD_HPP

#include "hdvlab/residue/finite_field.hpp"
#include "hdvlab/residue/mpoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hdv {

class ResidueElement;
class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

/// Residue fields of characteristic p: either F_q or F_q(x_1, ..., x_k).
class ResidueField : public std::enable_shared_from_this<ResidueField> {
   public:
    static ResidueFieldPtr finite(unsigned p, unsigned d = 1);
    static ResidueFieldPtr rational_functions(unsigned p, unsigned d, std::vector<std::string> vars);
    /// Parses "Fq(p,d)", "Fq(p)", "RatFun(p,d;x,y)" or "ratfun(p;x,y)".
    static ResidueFieldPtr parse(const std::string& text);

    unsigned characteristic() const { return fq_->p(); }
    unsigned fq_degree() const { return fq_->degree(); }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    bool is_finite() const { return vars_.empty(); }
    bool is_perfect() const { return is_finite(); }
    const FiniteFieldPtr& fq() const { return fq_; }

    /// Same F_q with the given variables appended.
    ResidueFieldPtr with_extra_vars(const std::vector<std::string>& extra) const;

    ResidueElement zero() const;
    ResidueElement one() const;
    ResidueElement from_int(long long n) const;
    ResidueElement from_fq(FiniteField::Elem c) const;
    ResidueElement variable(int i) const;
    ResidueElement variable(const std::string& name) const;
    ResidueElement fraction(MPoly num, MPoly den) const;
    /// Image of r under the inclusion of a field whose variables are a prefix
    /// of ours (same F_q).
    ResidueElement extend(const ResidueElement& r) const;
    /// Elements of F_q enumerated by code; only for finite fields.
    std::vector<ResidueElement> all_elements() const;

    std::string descriptor() const;

    friend bool operator==(const ResidueField& a, const ResidueField& b) {
        return *a.fq_ == *b.fq_ && a.vars_ == b.vars_;
    }

   private:
    ResidueField(FiniteFieldPtr fq, std::vector<std::string> vars) : fq_(std::move(fq)), vars_(std::move(vars)) {}
    FiniteFieldPtr fq_;
    std::vector<std::string> vars_;
};

bool same_field(const ResidueFieldPtr& a, const ResidueFieldPtr& b);

/// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
class ResidueElement {
   public:
    ResidueElement() = default;

    const ResidueFieldPtr& field() const { return k_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// For constants: the F_q code.
    FiniteField::Elem constant_value() const;

    ResidueElement operator-() const;
    friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
    friend ResidueElement operator/(const ResidueElement& a, const ResidueElement& b);
    ResidueElement& operator+=(const ResidueElement& o) { return *this = *this + o; }
    ResidueElement& operator-=(const ResidueElement& o) { return *this = *this - o; }
    ResidueElement& operator*=(const ResidueElement& o) { return *this = *this * o; }
    ResidueElement inverse() const;
    ResidueElement pow(long long e) const;
    ResidueElement frobenius() const;
    ResidueElement scale_int(long long n) const;

    friend bool operator==(const ResidueElement& a, const ResidueElement& b);
    friend bool operator!=(const ResidueElement& a, const ResidueElement& b) { return !(a == b); }
    friend bool operator<(const ResidueElement& a, const ResidueElement& b);

    std::string str() const;

   private:
    friend class ResidueField;
    struct Reduced {};
    ResidueElement(ResidueFieldPtr k, MPoly num, MPoly den);
    /// num and den already coprime; only the leading coefficient is fixed.
    ResidueElement(ResidueFieldPtr k, MPoly num, MPoly den, Reduced);
    ResidueFieldPtr k_;
    MPoly num_;
    MPoly den_;
};

}  // namespace hdv

#endif  // HDVLAB_RESIDUE_RESIDUE_FIELD_HPP
