// Acceptance gate: one criterion per function, one PASS/FAIL line each,
// exit code = number of failed criteria.

#include "simplexsum/applications.hpp"
#include "simplexsum/determinant.hpp"
#include "simplexsum/identity.hpp"
#include "simplexsum/verification.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace simplexsum;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Configuration<Rational> bipyramid() {
    std::vector<Point<Rational>> pts;
    for (const auto& row : std::vector<std::vector<long long>>{
             {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}}) {
        Point<Rational> p;
        for (long long v : row) p.emplace_back(v);
        pts.push_back(std::move(p));
    }
    return Configuration<Rational>(3, std::move(pts));
}

Rational random_rational(std::mt19937_64& eng, long long num_bound, long long den_bound) {
    const auto num = static_cast<long long>(eng() % (2 * num_bound + 1)) - num_bound;
    const auto den = static_cast<long long>(eng() % den_bound) + 1;
    return Rational(Rational::Int(num), Rational::Int(den));
}

Configuration<Rational> random_config(std::mt19937_64& eng, std::size_t dim, bool integers) {
    std::vector<Point<Rational>> pts(dim + 2);
    for (auto& p : pts) {
        p.resize(dim);
        for (auto& c : p) {
            c = integers ? Rational(static_cast<long long>(eng() % 21) - 10)
                         : random_rational(eng, 100, 100);
        }
    }
    return Configuration<Rational>(dim, std::move(pts));
}

// criterion 1: the n=3 fixture evaluates to (3,-2,-2,-2,3) with a zero
// residual, exactly, in under a millisecond
Outcome bipyramid_fixture() {
    const auto cfg = bipyramid();
    const std::vector<Rational> expected = {Rational(3), Rational(-2), Rational(-2), Rational(-2),
                                            Rational(3)};

    bool ok = true;
    double best_ms = 1e9;
    for (int rep = 0; rep < 9; ++rep) {
        const auto start = Clock::now();
        const auto coeffs = coefficients(cfg);
        const auto res = residual(cfg);
        const double elapsed = ms_since(start);
        best_ms = std::min(best_ms, elapsed);
        ok = ok && coeffs.signed_coeffs == expected;
        ok = ok && res.pass && res.scalar.is_zero();
        for (const auto& v : res.vector) ok = ok && v.is_zero();
    }
    std::ostringstream note;
    note << "best runtime " << best_ms << " ms";
    return {ok && best_ms < 1.0, note.str()};
}

// criterion 2: exact residual vanishes for 200 random rational
// configurations in every dimension 1..8, in under 60 s
Outcome residual_sweep() {
    const auto start = Clock::now();
    std::size_t failures = 0;
    std::mt19937_64 eng(20260810);
    for (std::size_t dim = 1; dim <= 8; ++dim) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto cfg = random_config(eng, dim, trial % 2 == 0);
            const auto res = residual(cfg);
            bool zero = res.pass && res.scalar.is_zero();
            for (const auto& v : res.vector) zero = zero && v.is_zero();
            if (!zero) ++failures;
        }
    }
    const double elapsed = ms_since(start);
    std::ostringstream note;
    note << failures << " failures, " << elapsed / 1000.0 << " s";
    return {failures == 0 && elapsed < 60000.0, note.str()};
}

// criterion 3: the hatted point-column expansion equals the difference path
Outcome expansion_equivalence() {
    std::size_t failures = 0;
    std::mt19937_64 eng(333);
    for (std::size_t dim = 1; dim <= 6; ++dim) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto cfg = random_config(eng, dim, trial % 2 == 0);
            for (std::size_t i = 0; i < cfg.point_count(); ++i) {
                if (delta_expanded(cfg, i) != delta(cfg, i)) ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

// criterion 4: the planar quadrilateral identity, written with the four
// triangle determinants; convex cyclic orderings share one sign
namespace quad {

Rational twice_area(const Point<Rational>& p, const Point<Rational>& q, const Point<Rational>& r) {
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

bool identity_holds(const std::vector<Point<Rational>>& v) {
    // K_BCD A - K_ACD B + K_ABD C - K_ABC D = 0
    const Rational k0 = twice_area(v[1], v[2], v[3]);
    const Rational k1 = twice_area(v[2], v[3], v[0]);
    const Rational k2 = twice_area(v[3], v[0], v[1]);
    const Rational k3 = twice_area(v[0], v[1], v[2]);
    for (std::size_t r = 0; r < 2; ++r) {
        const Rational c =
            k0 * v[0][r] - k1 * v[1][r] + k2 * v[2][r] - k3 * v[3][r];
        if (!c.is_zero()) return false;
    }
    return true;
}

bool same_sign_areas(const std::vector<Point<Rational>>& v) {
    const Rational k0 = twice_area(v[1], v[2], v[3]);
    const Rational k1 = twice_area(v[2], v[3], v[0]);
    const Rational k2 = twice_area(v[3], v[0], v[1]);
    const Rational k3 = twice_area(v[0], v[1], v[2]);
    const int s = k0.sign();
    return s != 0 && k1.sign() == s && k2.sign() == s && k3.sign() == s;
}

bool convex_cyclic(const std::vector<Point<Rational>>& v) {
    // consecutive orientation signs all agree and are nonzero
    int sign = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const int s = twice_area(v[i], v[(i + 1) % 4], v[(i + 2) % 4]).sign();
        if (s == 0) return false;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return true;
}

} // namespace quad

Outcome quadrilateral_identity() {
    std::mt19937_64 eng(444);
    std::size_t failures = 0;

    // arbitrary vertex orderings
    for (int trial = 0; trial < 100; ++trial) {
        const auto cfg = random_config(eng, 2, trial % 2 == 0);
        if (!quad::identity_holds(cfg.points())) ++failures;
    }

    // convex cyclic orderings: reorder random points until one of the three
    // essentially different cyclic orders is convex
    int convex_done = 0;
    while (convex_done < 100) {
        const auto cfg = random_config(eng, 2, false);
        for (const auto& order : {std::vector<std::size_t>{0, 1, 2, 3},
                                  std::vector<std::size_t>{0, 1, 3, 2},
                                  std::vector<std::size_t>{0, 2, 1, 3}}) {
            std::vector<Point<Rational>> v;
            for (std::size_t k : order) v.push_back(cfg.point(k));
            if (!quad::convex_cyclic(v)) continue;
            if (!quad::identity_holds(v) || !quad::same_sign_areas(v)) ++failures;
            ++convex_done;
            break;
        }
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

// criterion 5: bareiss equals cofactor on 500 matrices up to order 7, and
// the null-space oracle is parallel to the coefficient vector
Outcome oracle_agreement() {
    std::mt19937_64 eng(555);
    std::size_t failures = 0;

    for (int k = 0; k < 500; ++k) {
        const std::size_t order = 1 + k % 7;
        SquareMatrix<Rational> m(order);
        for (std::size_t c = 0; c < order; ++c) {
            for (std::size_t r = 0; r < order; ++r) {
                m.at(r, c) = k % 2 == 0 ? Rational(static_cast<long long>(eng() % 21) - 10)
                                        : random_rational(eng, 20, 8);
            }
        }
        if (det_bareiss(m) != det_cofactor(m)) ++failures;
    }

    int checked = 0;
    std::size_t dim = 1;
    while (checked < 200) {
        dim = dim % 6 + 1;
        const auto cfg = random_config(eng, dim, checked % 2 == 0);
        std::vector<Rational> null_vec;
        try {
            null_vec = nullspace_oracle(cfg);
        } catch (const RankDeficientError&) {
            continue;
        }
        const auto coeffs = coefficients(cfg);
        bool nonzero = false;
        for (const auto& c : coeffs.signed_coeffs) nonzero = nonzero || !c.is_zero();
        if (!nonzero) continue;
        if (!parallel(null_vec, coeffs.signed_coeffs)) ++failures;
        ++checked;
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

// criterion 6: the metamorphic invariants (translation, cyclic relabel,
// duplicate point, sign pattern) over 100 trials per dimension 1..6
Outcome metamorphic_invariants() {
    const TrialReport report = run_property_suite(1, 6, 100, 42);
    std::ostringstream note;
    note << report.trial_count << " trials, " << report.failures.size() << " failures";
    if (!report.failures.empty()) {
        note << "; first: " << report.failures.front().operation << " ("
             << report.failures.front().detail << ")";
    }
    return {report.failures.empty(), note.str()};
}

// criterion 7: barycentric reconstruction on 200 interior points per
// dimension 1..5, plus the vertex and centroid special cases
Outcome barycentric_reconstruction() {
    std::mt19937_64 eng(777);
    std::size_t failures = 0;
    for (std::size_t dim = 1; dim <= 5; ++dim) {
        int done = 0;
        while (done < 200) {
            std::vector<Point<Rational>> simplex(dim + 1);
            for (auto& p : simplex) {
                p.resize(dim);
                for (auto& c : p) c = random_rational(eng, 10, 4);
            }
            if (is_degenerate_simplex(simplex).degenerate) continue;

            std::vector<Rational> weights(dim + 1);
            Rational total(0);
            for (auto& w : weights) {
                w = Rational(static_cast<long long>(eng() % 30) + 1);
                total += w;
            }
            Point<Rational> p(dim, Rational(0));
            for (std::size_t k = 0; k <= dim; ++k) {
                weights[k] /= total;
                for (std::size_t r = 0; r < dim; ++r) p[r] += weights[k] * simplex[k][r];
            }

            const auto coords = barycentric(simplex, p);
            Point<Rational> rebuilt(dim, Rational(0));
            for (std::size_t k = 0; k <= dim; ++k) {
                for (std::size_t r = 0; r < dim; ++r) {
                    rebuilt[r] += coords.lambdas[k] * simplex[k][r];
                }
            }
            if (!(rebuilt == p)) ++failures;
            for (const auto& l : coords.lambdas) {
                if (!(l > Rational(0) && l < Rational(1))) ++failures;
            }

            if (done % 10 == 0) {
                // vertex and centroid special points
                const auto vertex_coords = barycentric(simplex, simplex[0]);
                if (!(vertex_coords.lambdas[0] == Rational(1))) ++failures;
                for (std::size_t k = 1; k <= dim; ++k) {
                    if (!vertex_coords.lambdas[k].is_zero()) ++failures;
                }
                Point<Rational> centroid(dim, Rational(0));
                const Rational share(Rational::Int(1), Rational::Int(dim + 1));
                for (std::size_t k = 0; k <= dim; ++k) {
                    for (std::size_t r = 0; r < dim; ++r) centroid[r] += share * simplex[k][r];
                }
                for (const auto& l : barycentric(simplex, centroid).lambdas) {
                    if (!(l == share)) ++failures;
                }
            }
            ++done;
        }
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

// criterion 8: float verdicts at tolerance 1e-9 on configurations with
// coordinates within +-10; failures must verify exactly on the
// rationalized input
Outcome float_backend() {
    std::mt19937_64 eng(888);
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t unattributed = 0;
    for (std::size_t dim = 1; dim <= 6; ++dim) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Point<Rational>> pts(dim + 2);
            for (auto& p : pts) {
                p.resize(dim);
                for (auto& c : p) {
                    if (trial % 2 == 0) {
                        c = Rational(static_cast<long long>(eng() % 21) - 10);
                    } else {
                        // bounded denominators keep the values inside +-10
                        const auto den = static_cast<long long>(eng() % 10) + 1;
                        const auto num =
                            static_cast<long long>(eng() % (20 * den + 1)) - 10 * den;
                        c = Rational(Rational::Int(num), Rational::Int(den));
                    }
                }
            }
            const Configuration<Rational> cfg(dim, std::move(pts));
            const auto fcfg = to_float(cfg);
            const auto fres = residual(fcfg, {1e-9});
            ++trials;
            if (fres.pass) {
                ++passes;
            } else if (!residual(rationalized(fcfg)).pass) {
                // a float failure must be rounding, never logic
                ++unattributed;
            }
        }
    }
    const double rate = static_cast<double>(passes) / static_cast<double>(trials);
    std::ostringstream note;
    note << passes << "/" << trials << " passed (" << rate * 100.0 << "%), " << unattributed
         << " unattributed failures";
    return {rate >= 0.99 && unattributed == 0, note.str()};
}

struct Criterion {
    int id;
    const char* label;
    Outcome (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "bipyramid fixture: exact (3,-2,-2,-2,3), zero residual, <1ms", &bipyramid_fixture},
        {2, "exact residual sweep: n=1..8 x 200 configs, <60s", &residual_sweep},
        {3, "expansion equivalence: delta_expanded == delta, n=1..6 x 100", &expansion_equivalence},
        {4, "quadrilateral identity: exact vanish, convex one-sign areas", &quadrilateral_identity},
        {5, "oracle agreement: bareiss==cofactor x500, nullspace parallel x200", &oracle_agreement},
        {6, "metamorphic invariants: 100 trials per n in 1..6", &metamorphic_invariants},
        {7, "barycentric: exact reconstruction, interior/vertex/centroid", &barycentric_reconstruction},
        {8, "float backend: >=99% verdicts at 1e-9, failures attributed", &float_backend},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const Outcome outcome = c.run();
        std::printf("%s  %d  %s  [%s]\n", outcome.pass ? "PASS" : "FAIL", c.id, c.label,
                    outcome.note.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
