#pragma once

#include "simplexsum/errors.hpp"
#include "simplexsum/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace simplexsum {

/// Laplace expansion along the first column. Exponential cost; this is the
/// reference semantics and the brute-force oracle for the other kernels.
template <Scalar S>
S det_cofactor(const SquareMatrix<S>& m) {
    const std::size_t n = m.order();
    if (n == 1) return m.at(0, 0);
    S sum(0);
    for (std::size_t r = 0; r < n; ++r) {
        if (is_zero(m.at(r, 0))) continue;
        S term = m.at(r, 0) * det_cofactor(m.minor_matrix(r, 0));
        if (r % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

/// Fraction-free Bareiss elimination. Every update is a 2x2 determinant
/// divided exactly by the previous pivot, so integer inputs keep integer
/// intermediates. Row swaps pick the first nonzero pivot (exact arithmetic,
/// no stability concern). When `pivots_out` is given, the pivot sequence is
/// recorded for inspection.
template <Scalar S>
    requires is_exact_v<S>
S det_bareiss(const SquareMatrix<S>& m, std::vector<S>* pivots_out = nullptr) {
    const std::size_t n = m.order();
    SquareMatrix<S> w = m;
    if (pivots_out) pivots_out->clear();
    bool negated = false;
    S prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && is_zero(w.at(pivot_row, k))) ++pivot_row;
        if (pivot_row == n) return S(0);
        if (pivot_row != k) {
            w.swap_rows(k, pivot_row);
            negated = !negated;
        }
        const S pivot = w.at(k, k);
        if (pivots_out) pivots_out->push_back(pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = S(0);
        }
        prev = pivot;
    }
    if (pivots_out) pivots_out->push_back(w.at(n - 1, n - 1));
    S det = w.at(n - 1, n - 1);
    return negated ? -det : det;
}

struct FloatDet {
    double value = 0.0;
    /// u * n^3 * (max |entry| seen during elimination) * (product of all
    /// |pivots| except the smallest). A rank deficiency turns exactly one
    /// pivot into pure roundoff ~ u*n*growth; the others multiply that
    /// error into the determinant, so this scale tracks the roundoff a
    /// near-singular determinant actually carries. Consumed by verdicts
    /// only; never folded into the value.
    double error_scale = 0.0;
};

/// Row elimination with partial pivoting over doubles.
inline FloatDet det_float(const SquareMatrix<double>& m) {
    const std::size_t n = m.order();
    SquareMatrix<double> w = m;
    double growth = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!std::isfinite(w.at(r, c))) {
                throw NonFiniteError("non-finite matrix entry");
            }
            growth = std::max(growth, std::fabs(w.at(r, c)));
        }
    }
    constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;
    const double cube = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);

    double det = 1.0;
    double pivot_product = 1.0;
    double pivot_min = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        double best = std::fabs(w.at(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::fabs(w.at(r, k)) > best) {
                best = std::fabs(w.at(r, k));
                pivot_row = r;
            }
        }
        if (best == 0.0) {
            // an exactly zero trailing column: the determinant is exact zero
            return {0.0, unit_roundoff * cube * growth * pivot_product};
        }
        if (pivot_row != k) {
            w.swap_rows(k, pivot_row);
            det = -det;
        }
        const double pivot = w.at(k, k);
        det *= pivot;
        pivot_product *= std::fabs(pivot);
        pivot_min = std::min(pivot_min, std::fabs(pivot));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = w.at(r, k) / pivot;
            w.at(r, k) = 0.0;
            for (std::size_t c = k + 1; c < n; ++c) {
                w.at(r, c) -= factor * w.at(k, c);
                growth = std::max(growth, std::fabs(w.at(r, c)));
            }
        }
    }
    const double prefix = n > 1 ? pivot_product / pivot_min : 1.0;
    return {det, unit_roundoff * cube * growth * prefix};
}

/// Production determinant: cofactor at tiny orders where it is cheapest and
/// branch-free, Bareiss above that; the float realization goes through
/// det_float and drops the error scale.
template <Scalar S>
S det(const SquareMatrix<S>& m) {
    if constexpr (is_exact_v<S>) {
        return m.order() <= 3 ? det_cofactor(m) : det_bareiss(m);
    } else {
        return det_float(m).value;
    }
}

} // namespace simplexsum
