#pragma once

#include "simplexsum/rational.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace simplexsum {

/// The two scalar realizations: exact Rational and binary double.
template <class S>
concept Scalar = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

template <Scalar S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

template <Scalar S>
bool is_zero(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.is_zero();
    } else {
        return v == 0.0;
    }
}

template <Scalar S>
S abs_value(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.abs();
    } else {
        return std::fabs(v);
    }
}

template <Scalar S>
std::string scalar_to_string(const S& v) {
    if constexpr (is_exact_v<S>) {
        return v.to_string();
    } else {
        return std::to_string(v);
    }
}

inline double to_double(const Rational& v) { return v.to_double(); }
inline double to_double(double v) { return v; }

} // namespace simplexsum
