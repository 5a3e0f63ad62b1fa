#pragma once

// Checked 64-bit integer arithmetic and an exact rational type.
// Every identity in this library is exact; a silent wrap would invalidate
// all of them, so the checked ops throw instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace moduli {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected caller input (bad genus, bad rank, flag out of range, ...).
struct invalid_input : error {
    using error::error;
};

// An exact identity failed or an internal consistency check tripped.
// Always names the failing identity.
struct invariant_violation : error {
    using error::error;
};

// Checked arithmetic overflowed 64 bits.
struct arithmetic_overflow : error {
    arithmetic_overflow() : error("integer overflow in exact arithmetic") {}
    explicit arithmetic_overflow(const std::string& where)
        : error("integer overflow in exact arithmetic: " + where) {}
};

using i64 = std::int64_t;

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("add");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("sub");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("mul");
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

} // namespace checked

namespace detail {

// floor/ceil division for possibly negative numerators
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b) { return checked::neg(floor_div(checked::neg(a), b)); }

} // namespace detail

// Exact rational on checked int64, always normalized: den > 0, gcd(|num|,den) = 1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {} // NOLINT: implicit from integers is wanted
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (den_ == 0) throw invalid_input("rational with zero denominator");
        normalize();
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    Rational operator-() const { return Rational(checked::neg(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
                        checked::mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw invalid_input("rational division by zero");
        return Rational(checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // cross-multiplication is exact; denominators are positive
        return checked::mul(a.num_, b.den_) < checked::mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked::neg(num_);
            den_ = checked::neg(den_);
        }
        i64 g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    i64 num_;
    i64 den_;
};

} // namespace moduli
