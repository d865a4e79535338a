#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace simplexsum {

/// Arbitrary-precision rational held in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Canonical form is maintained by every operation, so
/// operator== is exact value equality and is_zero() is a numerator test.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(int value) : value_(value) {}
    Rational(long long value) : value_(value) {}
    Rational(const Int& value) : value_(value) {}
    Rational(const Int& num, const Int& den);

    /// Parses "p", "p/q" or a decimal literal such as "0.25" (scaled
    /// integers, so "0.25" becomes exactly 1/4). Throws ParseError.
    static Rational from_string(std::string_view text);

    /// Exact binary value of a finite double. Throws NonFiniteError.
    static Rational from_double(double value);

    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return value_.convert_to<double>(); }

    /// Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

} // namespace simplexsum
