#ifndef HDVLAB_VALUE_HPP
#define HDVLAB_VALUE_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

namespace hdv {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
    return os.str();
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// floor(q) for a rational with positive denominator.
inline long long floor_of(const Rational& q) {
    long long n = q.numerator(), d = q.denominator();
    long long f = n / d;
    if ((n % d != 0) && (n < 0)) --f;
    return f;
}

/// Element of Q ∪ {+∞}; used for valuations.
class Value {
   public:
    Value() = default;
    Value(const Rational& q) : q_(q) {}  // NOLINT: implicit by intent
    Value(long long n) : q_(n) {}        // NOLINT

    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }
    const Rational& rational() const { return q_; }

    friend bool operator==(const Value& a, const Value& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
    }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const Value& a, const Value& b) { return b < a; }
    friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
    friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }
    friend Value operator+(const Value& a, const Value& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Value(a.q_ + b.q_);
    }
    friend Value operator-(const Value& a, const Rational& b) {
        if (a.inf_) return infinity();
        return Value(a.q_ - b);
    }

    std::string str() const { return inf_ ? std::string("inf") : to_string(q_); }
    friend std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

   private:
    bool inf_ = false;
    Rational q_{0};
};

inline Value min(const Value& a, const Value& b) { return a < b ? a : b; }

}  // namespace hdv

#endif  // HDVLAB_VALUE_HPP
