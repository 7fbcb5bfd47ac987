#ifndef HDVLAB_ERRORS_HPP
#define HDVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdv {

enum class ErrorKind {
    InsufficientPrecision,
    NotAUnit,
    PreconditionViolated,
    NotIrreducible,
    NotSeparable,
    UnsupportedField,
    NotInNabla0,
    WrongCharacteristic,
    IterationBudgetExceeded,
    UnclassifiableAtPrecision,
    IndexDivisible,
    NotEisensteinOverK,
    DescentMismatch,
    NotCyclicDetectable,
    CheckFailed,
    ClassificationMismatch,
    TowerHeightExceeded,
    ParseError,
    DomainError,
};

constexpr std::string_view error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotSeparable: return "NotSeparable";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::NotInNabla0: return "NotInNabla0";
        case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
        case ErrorKind::UnclassifiableAtPrecision: return "UnclassifiableAtPrecision";
        case ErrorKind::IndexDivisible: return "IndexDivisible";
        case ErrorKind::NotEisensteinOverK: return "NotEisensteinOverK";
        case ErrorKind::DescentMismatch: return "DescentMismatch";
        case ErrorKind::NotCyclicDetectable: return "NotCyclicDetectable";
        case ErrorKind::CheckFailed: return "CheckFailed";
        case ErrorKind::ClassificationMismatch: return "ClassificationMismatch";
        case ErrorKind::TowerHeightExceeded: return "TowerHeightExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DomainError: return "DomainError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

}  // namespace hdv

#endif  // HDVLAB_ERRORS_HPP
