#pragma once

#include "simplexsum/configuration.hpp"
#include "simplexsum/determinant.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplexsum {

namespace detail {

inline void check_index(const std::size_t i, const std::size_t count) {
    if (i >= count) {
        throw std::out_of_range("point index " + std::to_string(i) + " out of range 0.." +
                                std::to_string(count - 1));
    }
}

} // namespace detail

/// The n x n matrix whose column j (1-based, j = 1..n) is
/// A_{(i+j+1) mod (n+2)} - A_{(i+1) mod (n+2)}: edge vectors of the simplex
/// spanned by the n+1 points other than A_i, anchored at A_{i+1}.
template <Scalar S>
SquareMatrix<S> build_m_matrix(const Configuration<S>& cfg, std::size_t i) {
    const std::size_t n = cfg.dimension();
    const std::size_t count = n + 2;
    detail::check_index(i, count);
    const Point<S>& anchor = cfg.point((i + 1) % count);
    SquareMatrix<S> m(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const Point<S>& p = cfg.point((i + j + 1) % count);
        for (std::size_t r = 0; r < n; ++r) {
            m.at(r, j - 1) = p[r] - anchor[r];
        }
    }
    return m;
}

/// The coefficient of A_i: det M_i, i.e. n! times the signed volume of the
/// simplex on the other n+1 points.
template <Scalar S>
S delta(const Configuration<S>& cfg, std::size_t i) {
    return det(build_m_matrix(cfg, i));
}

/// Signed volume of the simplex omitting A_i (delta divided by n!).
template <Scalar S>
S signed_volume(const Configuration<S>& cfg, std::size_t i) {
    S factorial(1);
    for (std::size_t k = 2; k <= cfg.dimension(); ++k) factorial *= S(static_cast<int>(k));
    return delta(cfg, i) / factorial;
}

/// Same coefficient computed from raw point columns: the alternating sum of
/// the n+1 determinants det[A_{i+1} | ... | (A_{i+j} omitted) | ... | A_{i+n+1}].
/// Cross-check path for delta; no differencing involved.
template <Scalar S>
S delta_expanded(const Configuration<S>& cfg, std::size_t i) {
    const std::size_t n = cfg.dimension();
    const std::size_t count = n + 2;
    detail::check_index(i, count);
    S sum(0);
    for (std::size_t j = 1; j <= n + 1; ++j) {
        SquareMatrix<S> m(n);
        std::size_t col = 0;
        for (std::size_t k = 1; k <= n + 1; ++k) {
            if (k == j) continue;
            const Point<S>& p = cfg.point((i + k) % count);
            for (std::size_t r = 0; r < n; ++r) m.at(r, col) = p[r];
            ++col;
        }
        S term = det(m);
        if ((j - 1) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

/// All n+2 coefficients, the signs (-1)^{i(n+1)}, and their products.
/// For odd n every sign is +1; for even n the signs alternate +1, -1, ...
template <Scalar S>
struct CoefficientVector {
    std::vector<S> deltas;
    std::vector<int> signs;
    std::vector<S> signed_coeffs;
};

template <Scalar S>
CoefficientVector<S> coefficients(const Configuration<S>& cfg) {
    const std::size_t count = cfg.dimension() + 2;
    const bool alternating = cfg.dimension() % 2 == 0;
    CoefficientVector<S> out;
    out.deltas.reserve(count);
    out.signs.reserve(count);
    out.signed_coeffs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int sign = (alternating && i % 2 == 1) ? -1 : 1;
        S d = delta(cfg, i);
        out.signs.push_back(sign);
        out.signed_coeffs.push_back(sign < 0 ? -d : d);
        out.deltas.push_back(std::move(d));
    }
    return out;
}

/// Rescales so the first nonzero signed coefficient is exactly 1; for
/// comparing against null-space oracles up to scale. Throws AllDegenerateError
/// on the zero vector.
template <Scalar S>
CoefficientVector<S> normalized(CoefficientVector<S> coeffs) {
    std::size_t first = 0;
    while (first < coeffs.signed_coeffs.size() && is_zero(coeffs.signed_coeffs[first])) ++first;
    if (first == coeffs.signed_coeffs.size()) {
        throw AllDegenerateError("cannot normalize the zero coefficient vector");
    }
    const S scale = coeffs.signed_coeffs[first];
    for (std::size_t i = 0; i < coeffs.signed_coeffs.size(); ++i) {
        coeffs.signed_coeffs[i] /= scale;
        coeffs.deltas[i] /= scale;
    }
    return coeffs;
}

struct TolerancePolicy {
    double tolerance = 1e-9;
};

/// Outcome of evaluating the identity: the weighted point sum, the plain
/// coefficient sum, and a verdict. Exact backend demands exact zeros;
/// the float backend compares against tolerance * scale with
/// scale = (sum |delta_i|) * max_i ||A_i||_inf for the vector part and
/// scale' = sum |delta_i| for the scalar part.
template <Scalar S>
struct Residual {
    Point<S> vector;
    S scalar;
    bool pass = false;
    std::optional<double> tolerance_used;  // nullopt marks the exact backend
    std::optional<double> relative_residual;
};

template <Scalar S>
Residual<S> residual(const Configuration<S>& cfg, TolerancePolicy policy = {}) {
    const std::size_t n = cfg.dimension();
    const auto coeffs = coefficients(cfg);

    Residual<S> out;
    out.vector.assign(n, S(0));
    out.scalar = S(0);
    for (std::size_t i = 0; i < cfg.point_count(); ++i) {
        const S& c = coeffs.signed_coeffs[i];
        out.scalar += c;
        const Point<S>& p = cfg.point(i);
        for (std::size_t r = 0; r < n; ++r) {
            out.vector[r] += c * p[r];
        }
    }

    if constexpr (is_exact_v<S>) {
        bool zero = out.scalar.is_zero();
        for (const S& v : out.vector) zero = zero && v.is_zero();
        out.pass = zero;
    } else {
        S coeff_mass(0);
        for (const S& d : coeffs.deltas) coeff_mass += abs_value(d);
        S coord_mag(0);
        for (const auto& p : cfg.points()) {
            for (const S& c : p) coord_mag = std::max(coord_mag, abs_value(c));
        }
        S vec_norm(0);
        for (const S& v : out.vector) vec_norm = std::max(vec_norm, abs_value(v));

        const double vector_scale = coeff_mass * coord_mag;
        const double scalar_scale = coeff_mass;
        out.tolerance_used = policy.tolerance;
        out.pass = vec_norm <= policy.tolerance * vector_scale &&
                   abs_value(out.scalar) <= policy.tolerance * scalar_scale;
        const double vec_ratio = vector_scale > 0.0 ? vec_norm / vector_scale : (vec_norm > 0.0 ? 1.0 : 0.0);
        const double sca_ratio = scalar_scale > 0.0 ? abs_value(out.scalar) / scalar_scale
                                                    : (abs_value(out.scalar) > 0.0 ? 1.0 : 0.0);
        out.relative_residual = std::max(vec_ratio, sca_ratio);
    }
    return out;
}

} // namespace simplexsum
