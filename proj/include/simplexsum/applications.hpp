#pragma once

#include "simplexsum/identity.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace simplexsum {

template <Scalar S>
struct BarycentricCoords {
    /// n+1 weights summing to 1 with p = sum lambdas[k] * A_k.
    std::vector<S> lambdas;
};

template <Scalar S>
struct DegeneracyResult {
    bool degenerate = false;
    /// det[A_1-A_0 | ... | A_n-A_0]; zero (exact) or below the elimination
    /// error scale (float) iff the simplex is degenerate.
    S witness;
};

namespace detail {

template <Scalar S>
SquareMatrix<S> simplex_edge_matrix(const std::vector<Point<S>>& simplex) {
    if (simplex.empty()) {
        throw DimensionMismatchError("simplex needs at least 2 points");
    }
    const std::size_t n = simplex.size() - 1;
    if (n < 1) {
        throw DimensionMismatchError("simplex needs at least 2 points");
    }
    for (const auto& p : simplex) {
        if (p.size() != n) {
            throw DimensionMismatchError("simplex of n+1 points requires points of length n");
        }
    }
    SquareMatrix<S> m(n);
    for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            m.at(r, j - 1) = simplex[j][r] - simplex[0][r];
        }
    }
    return m;
}

} // namespace detail

/// Tests affine dependence of n+1 points in R^n.
template <Scalar S>
DegeneracyResult<S> is_degenerate_simplex(const std::vector<Point<S>>& simplex) {
    const SquareMatrix<S> m = detail::simplex_edge_matrix(simplex);
    DegeneracyResult<S> out;
    if constexpr (is_exact_v<S>) {
        out.witness = det(m);
        out.degenerate = out.witness.is_zero();
    } else {
        const FloatDet d = det_float(m);
        out.witness = d.value;
        out.degenerate = std::fabs(d.value) <= d.error_scale;
    }
    return out;
}

/// Barycentric coordinates of p with respect to an n-simplex, read off the
/// coefficients of the configuration (A_0..A_n = simplex, A_{n+1} = p):
/// lambdas[k] = -c_k / c_{n+1}. The coefficient sum identity makes them sum
/// to 1 and the vector identity makes them reconstruct p, so no linear
/// system is solved per query.
template <Scalar S>
BarycentricCoords<S> barycentric(const std::vector<Point<S>>& simplex, const Point<S>& p) {
    if (simplex.size() < 2) {
        throw DimensionMismatchError("simplex needs at least 2 points");
    }
    const std::size_t n = simplex.size() - 1;
    if (p.size() != n) {
        throw DimensionMismatchError("query point length does not match simplex dimension");
    }

    // c_{n+1} is the simplex edge determinant itself; vet it before paying
    // for the other n+1 coefficients.
    const DegeneracyResult<S> deg = is_degenerate_simplex(simplex);
    if (deg.degenerate) {
        throw DegenerateSimplexError("degenerate simplex, witness determinant " +
                                     scalar_to_string(deg.witness));
    }

    std::vector<Point<S>> pts = simplex;
    pts.push_back(p);
    const Configuration<S> cfg(n, std::move(pts));
    const CoefficientVector<S> coeffs = coefficients(cfg);
    const S& last = coeffs.signed_coeffs[n + 1];

    BarycentricCoords<S> out;
    out.lambdas.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        out.lambdas.push_back(-coeffs.signed_coeffs[k] / last);
    }
    return out;
}

template <Scalar S>
struct DependenceCertificate {
    /// n+2 coefficients, not all zero, with sum c_i A_i = 0 and sum c_i = 0.
    std::vector<S> coeffs;
};

/// The signed coefficient vector as an affine dependence among the n+2
/// points. When every coefficient vanishes the identity is vacuous and no
/// certificate is manufactured.
template <Scalar S>
DependenceCertificate<S> dependence_certificate(const Configuration<S>& cfg) {
    CoefficientVector<S> coeffs = coefficients(cfg);
    bool all_zero = true;
    if constexpr (is_exact_v<S>) {
        for (const S& c : coeffs.signed_coeffs) all_zero = all_zero && c.is_zero();
    } else {
        for (std::size_t i = 0; i < coeffs.deltas.size(); ++i) {
            const FloatDet d = det_float(build_m_matrix(cfg, i));
            all_zero = all_zero && std::fabs(d.value) <= d.error_scale;
        }
    }
    if (all_zero) {
        throw AllDegenerateError("every coefficient vanishes; no nontrivial certificate");
    }
    return {std::move(coeffs.signed_coeffs)};
}

} // namespace simplexsum
