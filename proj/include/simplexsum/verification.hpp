#pragma once

#include "simplexsum/configuration.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace simplexsum {

/// Independent check of the identity: exact Gaussian elimination on the
/// lifted homogeneous system whose columns are (A_i; 1). Returns a spanning
/// null vector (length n+2). Plain row reduction, no shared code with the
/// determinant kernels. Throws RankDeficientError when the lifted rank is
/// below n+1 (the dependence space is not one-dimensional).
std::vector<Rational> nullspace_oracle(const Configuration<Rational>& cfg);

/// True iff a and b are parallel, tested by cross-multiplication
/// a_i * b_j == a_j * b_i so zero components need no special casing.
bool parallel(const std::vector<Rational>& a, const std::vector<Rational>& b);

enum class Distribution {
    SmallInteger,     // coordinates in [-10, 10]
    BoundedRational,  // |numerator| <= 100, denominator <= 100
    NearDegenerate,   // last point offset 2^-40 from the span of A_0..A_{n-1}
};

Rational default_near_degenerate_offset();

/// Reproducible pseudo-random configuration: equal seeds give equal output.
/// The offset parameter applies to NearDegenerate only; zero produces an
/// exactly degenerate subset.
Configuration<Rational> generate_configuration(std::size_t dimension, Distribution dist,
                                               std::uint64_t seed);
Configuration<Rational> generate_configuration(std::size_t dimension, Distribution dist,
                                               std::uint64_t seed, const Rational& offset);

struct PropertyFailure {
    std::size_t dimension = 0;
    std::uint64_t trial = 0;
    std::string operation;
    std::string detail;       // expected vs actual
    std::string config_json;  // replayable input
};

struct TrialReport {
    std::size_t trial_count = 0;
    std::vector<PropertyFailure> failures;
    double max_float_residual = 0.0;
    std::uint64_t seed = 0;
};

/// Randomized metamorphic harness. Per trial: exact residual vanishes, the
/// expanded coefficient path agrees with the difference path, translation
/// invariance, cyclic relabel index shift, duplicate-point vanishing, sign
/// pattern, barycentric reconstruction, det backend agreement, and the float
/// residual verdict at the default tolerance. Exact checks run first so a
/// float failure is attributed against a known-good exact answer. Failures
/// are data, not errors; deterministic given the seed (per-trial generators
/// are seeded from seed, dimension and trial index).
TrialReport run_property_suite(std::size_t dim_lo, std::size_t dim_hi,
                               std::size_t trials_per_dim, std::uint64_t seed);

} // namespace simplexsum
