#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "dualis/error.hpp"

namespace dualis {

/// Exact rational number. Always kept canonical: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw Error(ErrorCode::Structural, "rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(mpz_class n) : value_(std::move(n)) {}
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw Error(ErrorCode::Structural, "rational with zero denominator");
        value_ = mpq_class(std::move(num), std::move(den));
        value_.canonicalize();
    }

    /// Accepts "n", "-n", "n/d", "-n/d" with decimal digits.
    static Rational from_string(std::string_view text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::Structural, "division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational pow(unsigned long e) const;

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    double to_double() const { return value_.get_d(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

} // namespace dualis
