#include "simplexsum/verification.hpp"

#include "simplexsum/applications.hpp"
#include "simplexsum/errors.hpp"
#include "simplexsum/identity.hpp"
#include "simplexsum/io.hpp"

#include <random>
#include <sstream>
#include <utility>

namespace simplexsum {

namespace {

// mt19937_64 is bit-exact everywhere; the modulo bias is irrelevant for
// test-data generation.
std::int64_t bounded_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_small_integer(std::mt19937_64& eng) {
    return Rational(static_cast<long long>(bounded_int(eng, -10, 10)));
}

Rational random_bounded_rational(std::mt19937_64& eng) {
    return Rational(Rational::Int(bounded_int(eng, -100, 100)),
                    Rational::Int(bounded_int(eng, 1, 100)));
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t dimension, std::uint64_t trial) {
    // splitmix64 over a unique (seed, dimension, trial) key
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (dimension * 0x100000001ULL + trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::vector<Rational> nullspace_oracle(const Configuration<Rational>& cfg) {
    const std::size_t n = cfg.dimension();
    const std::size_t rows = n + 1;
    const std::size_t cols = n + 2;

    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[r][c] = cfg.point(c)[r];
        a[n][c] = Rational(1);
    }

    // reduce to RREF, tracking pivot columns
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < rows && a[pivot_row][col].is_zero()) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[row], a[pivot_row]);

        const Rational pivot = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }

    if (row < rows) {
        throw RankDeficientError("lifted point matrix has rank " + std::to_string(row) +
                                 " < " + std::to_string(rows));
    }

    // rank n+1 leaves exactly one free column
    std::size_t free_col = 0;
    while (free_col < pivot_cols.size() && pivot_cols[free_col] == free_col) ++free_col;

    std::vector<Rational> null_vector(cols, Rational(0));
    null_vector[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        null_vector[pivot_cols[r]] = -a[r][free_col];
    }
    return null_vector;
}

bool parallel(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

Rational default_near_degenerate_offset() {
    return Rational(Rational::Int(1), Rational::Int(1) << 40);
}

Configuration<Rational> generate_configuration(std::size_t dimension, Distribution dist,
                                               std::uint64_t seed) {
    return generate_configuration(dimension, dist, seed, default_near_degenerate_offset());
}

Configuration<Rational> generate_configuration(std::size_t dimension, Distribution dist,
                                               std::uint64_t seed, const Rational& offset) {
    if (dimension < 1) {
        throw DimensionMismatchError("dimension must be at least 1");
    }
    std::mt19937_64 eng(seed);
    const std::size_t count = dimension + 2;
    std::vector<Point<Rational>> pts(count);
    for (auto& p : pts) {
        p.resize(dimension);
        for (auto& c : p) {
            c = dist == Distribution::BoundedRational ? random_bounded_rational(eng)
                                                      : random_small_integer(eng);
        }
    }

    if (dist == Distribution::NearDegenerate) {
        // replace the last point by an affine combination of A_0..A_{n-1},
        // then nudge one coordinate; the subset {A_0..A_{n-1}, A_{n+1}} is
        // exactly degenerate at offset zero
        std::vector<Rational> weights(dimension);
        Rational sum(0);
        for (std::size_t k = 0; k + 1 < dimension; ++k) {
            weights[k] = Rational(Rational::Int(bounded_int(eng, -3, 3)),
                                  Rational::Int(bounded_int(eng, 1, 4)));
            sum += weights[k];
        }
        weights[dimension - 1] = Rational(1) - sum;

        Point<Rational> combo(dimension, Rational(0));
        for (std::size_t k = 0; k < dimension; ++k) {
            for (std::size_t r = 0; r < dimension; ++r) {
                combo[r] += weights[k] * pts[k][r];
            }
        }

        // nudge along an axis that actually leaves the span: a coordinate
        // direction can lie inside it, so probe until the nudged subset is
        // exactly non-degenerate (impossible only if the base points are
        // already affinely dependent)
        const auto start = static_cast<std::size_t>(
            bounded_int(eng, 0, static_cast<std::int64_t>(dimension) - 1));
        std::size_t chosen = start;
        if (!offset.is_zero()) {
            for (std::size_t attempt = 0; attempt < dimension; ++attempt) {
                const std::size_t coord = (start + attempt) % dimension;
                std::vector<Point<Rational>> subset(pts.begin(), pts.begin() + dimension);
                Point<Rational> nudged = combo;
                nudged[coord] += offset;
                subset.push_back(std::move(nudged));
                if (!is_degenerate_simplex(subset).degenerate) {
                    chosen = coord;
                    break;
                }
            }
        }
        combo[chosen] += offset;
        pts[count - 1] = std::move(combo);
    }

    return Configuration<Rational>(dimension, std::move(pts));
}

namespace {

class TrialChecker {
public:
    TrialChecker(TrialReport& report, const Configuration<Rational>& cfg, std::size_t dimension,
                 std::uint64_t trial)
        : report_(report), cfg_(cfg), dimension_(dimension), trial_(trial) {}

    void fail(const std::string& operation, const std::string& detail) {
        report_.failures.push_back(
            {dimension_, trial_, operation, detail, io::config_to_json(cfg_)});
    }

    void expect(bool ok, const std::string& operation, const std::string& detail) {
        if (!ok) fail(operation, detail);
    }

private:
    TrialReport& report_;
    const Configuration<Rational>& cfg_;
    std::size_t dimension_;
    std::uint64_t trial_;
};

void run_trial(TrialReport& report, std::size_t dim, std::uint64_t trial, std::uint64_t seed) {
    const Distribution dist =
        trial % 2 == 0 ? Distribution::SmallInteger : Distribution::BoundedRational;
    const Configuration<Rational> cfg = generate_configuration(dim, dist, trial_seed(seed, dim, trial));
    const std::size_t count = dim + 2;
    std::mt19937_64 eng(trial_seed(seed, dim, trial) ^ 0xD1B54A32D192ED03ULL);
    TrialChecker check(report, cfg, dim, trial);

    // exact identity
    const Residual<Rational> res = residual(cfg);
    check.expect(res.pass, "residual_exact", "vector/scalar not exactly zero");

    // expanded coefficient path
    for (std::size_t i = 0; i < count; ++i) {
        const Rational direct = delta(cfg, i);
        const Rational expanded = delta_expanded(cfg, i);
        check.expect(direct == expanded, "delta_expanded",
                     "i=" + std::to_string(i) + " expected " + direct.to_string() + " got " +
                         expanded.to_string());
    }

    // translation invariance
    Point<Rational> offset(dim);
    for (auto& c : offset) c = random_small_integer(eng);
    const Configuration<Rational> moved = translated(cfg, offset);
    for (std::size_t i = 0; i < count; ++i) {
        check.expect(delta(moved, i) == delta(cfg, i), "translation_invariance",
                     "delta changed under translation, i=" + std::to_string(i));
    }

    // cyclic relabel shifts indices
    const Configuration<Rational> shifted = cyclic_shifted(cfg);
    for (std::size_t i = 0; i < count; ++i) {
        check.expect(delta(shifted, i) == delta(cfg, (i + 1) % count), "cyclic_relabel",
                     "index shift violated, i=" + std::to_string(i));
    }

    // duplicate point kills every simplex containing it
    {
        const auto p = static_cast<std::size_t>(bounded_int(eng, 0, static_cast<std::int64_t>(count) - 1));
        auto q = static_cast<std::size_t>(bounded_int(eng, 0, static_cast<std::int64_t>(count) - 2));
        if (q >= p) ++q;
        std::vector<Point<Rational>> pts = cfg.points();
        pts[q] = pts[p];
        const Configuration<Rational> duplicated(dim, std::move(pts));
        for (std::size_t i = 0; i < count; ++i) {
            if (i == p || i == q) continue;
            check.expect(delta(duplicated, i).is_zero(), "duplicate_point",
                         "delta nonzero despite duplicate, i=" + std::to_string(i));
        }
    }

    // sign pattern
    const CoefficientVector<Rational> coeffs = coefficients(cfg);
    for (std::size_t i = 0; i < count; ++i) {
        const int expected = (dim % 2 == 0 && i % 2 == 1) ? -1 : 1;
        check.expect(coeffs.signs[i] == expected, "sign_pattern",
                     "sign mismatch at i=" + std::to_string(i));
    }

    // barycentric reconstruction on the leading simplex, interior query point
    std::vector<Point<Rational>> simplex(cfg.points().begin(), cfg.points().end() - 1);
    if (!is_degenerate_simplex(simplex).degenerate) {
        std::vector<Rational> weights(dim + 1);
        Rational total(0);
        for (auto& w : weights) {
            w = Rational(static_cast<long long>(bounded_int(eng, 1, 20)));
            total += w;
        }
        Point<Rational> p(dim, Rational(0));
        for (std::size_t k = 0; k <= dim; ++k) {
            weights[k] /= total;
            for (std::size_t r = 0; r < dim; ++r) p[r] += weights[k] * simplex[k][r];
        }
        const BarycentricCoords<Rational> bary = barycentric(simplex, p);
        Point<Rational> rebuilt(dim, Rational(0));
        Rational lambda_sum(0);
        for (std::size_t k = 0; k <= dim; ++k) {
            lambda_sum += bary.lambdas[k];
            for (std::size_t r = 0; r < dim; ++r) rebuilt[r] += bary.lambdas[k] * simplex[k][r];
        }
        check.expect(lambda_sum == Rational(1) && rebuilt == p && bary.lambdas == weights,
                     "barycentric_reconstruction", "lambdas do not reproduce the query point");
    }

    // det backend agreement (cofactor oracle is affordable up to order 6 here)
    if (dim <= 6) {
        const SquareMatrix<Rational> m0 = build_m_matrix(cfg, 0);
        check.expect(det_bareiss(m0) == det_cofactor(m0), "det_backend_agreement",
                     "bareiss disagrees with cofactor on M_0");
    }

    // float backend last, attributed against the exact pass above
    const Residual<double> fres = residual(to_float(cfg));
    if (fres.relative_residual) {
        report.max_float_residual = std::max(report.max_float_residual, *fres.relative_residual);
    }
    check.expect(fres.pass, "residual_float",
                 "float residual above tolerance, relative=" +
                     std::to_string(fres.relative_residual.value_or(-1.0)));
}

} // namespace

TrialReport run_property_suite(std::size_t dim_lo, std::size_t dim_hi, std::size_t trials_per_dim,
                               std::uint64_t seed) {
    if (dim_lo < 1 || dim_hi < dim_lo) {
        throw DimensionMismatchError("dimension range must satisfy 1 <= lo <= hi");
    }
    if (trials_per_dim < 1) {
        throw std::invalid_argument("trials_per_dim must be at least 1");
    }
    TrialReport report;
    report.seed = seed;
    for (std::size_t dim = dim_lo; dim <= dim_hi; ++dim) {
        for (std::uint64_t trial = 0; trial < trials_per_dim; ++trial) {
            run_trial(report, dim, trial, seed);
            ++report.trial_count;
        }
    }
    return report;
}

} // namespace simplexsum
