#include "simplexsum/rational.hpp"

#include "simplexsum/errors.hpp"

#include <cctype>
#include <cmath>

namespace simplexsum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational::Int parse_unsigned_int(std::string_view digits, std::string_view full) {
    if (!all_digits(digits)) {
        throw ParseError("invalid rational literal: '" + std::string(full) + "'");
    }
    return Rational::Int(std::string(digits));
}

} // namespace

Rational::Rational(const Int& num, const Int& den) {
    if (den.is_zero()) {
        throw ParseError("rational with zero denominator");
    }
    value_ = boost::multiprecision::cpp_rational(num);
    value_ /= boost::multiprecision::cpp_rational(den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }

    const std::string_view full = text;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ParseError("invalid rational literal: '" + std::string(full) + "'");
    }

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = parse_unsigned_int(text.substr(0, slash), full);
        Int den = parse_unsigned_int(text.substr(slash + 1), full);
        if (den.is_zero()) {
            throw ParseError("zero denominator in '" + std::string(full) + "'");
        }
        result = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        // decimal literal: scale by a power of ten, never through binary floats
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw ParseError("invalid rational literal: '" + std::string(full) + "'");
        }
        Int digits = 0;
        if (!whole.empty()) digits = parse_unsigned_int(whole, full);
        Int den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("invalid rational literal: '" + std::string(full) + "'");
            }
            digits = digits * 10 + (c - '0');
            den *= 10;
        }
        result = Rational(digits, den);
    } else {
        result = Rational(parse_unsigned_int(text, full));
    }
    return negative ? -result : result;
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw NonFiniteError("cannot rationalize non-finite double");
    }
    if (value == 0.0) return Rational();
    int exp = 0;
    double mantissa = std::frexp(value, &exp); // |mantissa| in [0.5, 1)
    auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exp -= 53;
    Int two_abs_exp = Int(1) << (exp < 0 ? -exp : exp);
    return exp < 0 ? Rational(scaled) / Rational(two_abs_exp) : Rational(scaled) * Rational(two_abs_exp);
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

} // namespace simplexsum
