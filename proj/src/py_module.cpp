#include "simplexsum/applications.hpp"
#include "simplexsum/errors.hpp"
#include "simplexsum/identity.hpp"
#include "simplexsum/io.hpp"
#include "simplexsum/verification.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;

namespace {

using simplexsum::Configuration;
using simplexsum::Point;
using simplexsum::Rational;

// python ints arrive exactly, strings go through the exact parser, floats
// contribute their exact binary value
using PyCoord = std::variant<std::int64_t, double, std::string>;
using PyPoints = std::vector<std::vector<PyCoord>>;

Rational coord_to_rational(const PyCoord& c) {
    if (std::holds_alternative<std::int64_t>(c)) {
        return Rational(static_cast<long long>(std::get<std::int64_t>(c)));
    }
    if (std::holds_alternative<double>(c)) {
        return Rational::from_double(std::get<double>(c));
    }
    return Rational::from_string(std::get<std::string>(c));
}

std::vector<Point<Rational>> to_points(const PyPoints& raw) {
    std::vector<Point<Rational>> pts;
    pts.reserve(raw.size());
    for (const auto& row : raw) {
        Point<Rational> p;
        p.reserve(row.size());
        for (const auto& c : row) p.push_back(coord_to_rational(c));
        pts.push_back(std::move(p));
    }
    return pts;
}

Configuration<Rational> to_config(const PyPoints& raw) {
    if (raw.size() < 3) {
        throw simplexsum::DimensionMismatchError("need at least 3 points (n+2 with n >= 1)");
    }
    return Configuration<Rational>(raw.size() - 2, to_points(raw));
}

bool want_float(const std::string& backend) {
    if (backend == "float") return true;
    if (backend == "exact") return false;
    throw simplexsum::ParseError("backend must be 'exact' or 'float', got '" + backend + "'");
}

py::list rational_strings(const std::vector<Rational>& values) {
    py::list out;
    for (const auto& v : values) out.append(v.to_string());
    return out;
}

py::list as_floats(const std::vector<double>& values) {
    py::list out;
    for (double v : values) out.append(v);
    return out;
}

py::dict coefficients_impl(const PyPoints& points, const std::string& backend) {
    const auto cfg = to_config(points);
    py::dict out;
    out["dimension"] = cfg.dimension();
    if (want_float(backend)) {
        const auto coeffs = simplexsum::coefficients(simplexsum::to_float(cfg));
        out["deltas"] = as_floats(coeffs.deltas);
        out["signs"] = py::cast(coeffs.signs);
        out["signed"] = as_floats(coeffs.signed_coeffs);
    } else {
        const auto coeffs = simplexsum::coefficients(cfg);
        out["deltas"] = rational_strings(coeffs.deltas);
        out["signs"] = py::cast(coeffs.signs);
        out["signed"] = rational_strings(coeffs.signed_coeffs);
    }
    return out;
}

py::dict verify_impl(const PyPoints& points, const std::string& backend, double tolerance) {
    const auto cfg = to_config(points);
    py::dict out;
    out["dimension"] = cfg.dimension();
    out["backend"] = backend;
    if (want_float(backend)) {
        const auto fcfg = simplexsum::to_float(cfg);
        const auto coeffs = simplexsum::coefficients(fcfg);
        const auto res = simplexsum::residual(fcfg, {tolerance});
        out["signed"] = as_floats(coeffs.signed_coeffs);
        out["residual_vector"] = as_floats(res.vector);
        out["residual_scalar"] = res.scalar;
        out["pass"] = res.pass;
        out["tolerance"] = tolerance;
        out["relative_residual"] = res.relative_residual.value_or(0.0);
    } else {
        const auto coeffs = simplexsum::coefficients(cfg);
        const auto res = simplexsum::residual(cfg);
        out["signed"] = rational_strings(coeffs.signed_coeffs);
        out["residual_vector"] = rational_strings(res.vector);
        out["residual_scalar"] = res.scalar.to_string();
        out["pass"] = res.pass;
    }
    return out;
}

py::object delta_impl(const PyPoints& points, std::size_t index, const std::string& backend,
                      bool expanded) {
    const auto cfg = to_config(points);
    if (want_float(backend)) {
        const auto fcfg = simplexsum::to_float(cfg);
        return py::cast(expanded ? simplexsum::delta_expanded(fcfg, index)
                                 : simplexsum::delta(fcfg, index));
    }
    const Rational d = expanded ? simplexsum::delta_expanded(cfg, index) : simplexsum::delta(cfg, index);
    return py::cast(d.to_string());
}

py::object barycentric_impl(const PyPoints& simplex, const std::vector<PyCoord>& point,
                            const std::string& backend) {
    const auto vertices = to_points(simplex);
    Point<Rational> p;
    for (const auto& c : point) p.push_back(coord_to_rational(c));
    if (want_float(backend)) {
        std::vector<Point<double>> fvertices;
        for (const auto& v : vertices) {
            Point<double> fv;
            for (const auto& c : v) fv.push_back(c.to_double());
            fvertices.push_back(std::move(fv));
        }
        Point<double> fp;
        for (const auto& c : p) fp.push_back(c.to_double());
        return as_floats(simplexsum::barycentric(fvertices, fp).lambdas);
    }
    return rational_strings(simplexsum::barycentric(vertices, p).lambdas);
}

py::tuple degenerate_impl(const PyPoints& simplex, const std::string& backend) {
    const auto vertices = to_points(simplex);
    if (want_float(backend)) {
        std::vector<Point<double>> fvertices;
        for (const auto& v : vertices) {
            Point<double> fv;
            for (const auto& c : v) fv.push_back(c.to_double());
            fvertices.push_back(std::move(fv));
        }
        const auto result = simplexsum::is_degenerate_simplex(fvertices);
        return py::make_tuple(result.degenerate, result.witness);
    }
    const auto result = simplexsum::is_degenerate_simplex(vertices);
    return py::make_tuple(result.degenerate, result.witness.to_string());
}

py::list certificate_impl(const PyPoints& points) {
    return rational_strings(simplexsum::dependence_certificate(to_config(points)).coeffs);
}

py::list nullspace_impl(const PyPoints& points) {
    return rational_strings(simplexsum::nullspace_oracle(to_config(points)));
}

py::dict suite_impl(std::size_t dim_lo, std::size_t dim_hi, std::size_t trials, std::uint64_t seed) {
    const auto report = simplexsum::run_property_suite(dim_lo, dim_hi, trials, seed);
    py::dict out;
    out["trial_count"] = report.trial_count;
    out["seed"] = report.seed;
    out["max_float_residual"] = report.max_float_residual;
    py::list failures;
    for (const auto& f : report.failures) {
        py::dict entry;
        entry["dimension"] = f.dimension;
        entry["trial"] = f.trial;
        entry["operation"] = f.operation;
        entry["detail"] = f.detail;
        entry["configuration"] = f.config_json;
        failures.append(std::move(entry));
    }
    out["failures"] = std::move(failures);
    return out;
}

py::list generate_impl(std::size_t dimension, const std::string& distribution, std::uint64_t seed) {
    simplexsum::Distribution dist;
    if (distribution == "small_integer") {
        dist = simplexsum::Distribution::SmallInteger;
    } else if (distribution == "bounded_rational") {
        dist = simplexsum::Distribution::BoundedRational;
    } else if (distribution == "near_degenerate") {
        dist = simplexsum::Distribution::NearDegenerate;
    } else {
        throw simplexsum::ParseError("unknown distribution '" + distribution + "'");
    }
    const auto cfg = simplexsum::generate_configuration(dimension, dist, seed);
    py::list out;
    for (const auto& p : cfg.points()) out.append(rational_strings(p));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Signed simplex-volume coefficients and affine-dependence checks for n+2 points in R^n";

    py::register_exception<simplexsum::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<simplexsum::DimensionMismatchError>(m, "DimensionMismatchError", PyExc_ValueError);
    py::register_exception<simplexsum::DegenerateSimplexError>(m, "DegenerateSimplexError", PyExc_ArithmeticError);
    py::register_exception<simplexsum::AllDegenerateError>(m, "AllDegenerateError", PyExc_ArithmeticError);
    py::register_exception<simplexsum::RankDeficientError>(m, "RankDeficientError", PyExc_ArithmeticError);
    py::register_exception<simplexsum::NonFiniteError>(m, "NonFiniteError", PyExc_ValueError);

    m.def("coefficients", &coefficients_impl, py::arg("points"), py::arg("backend") = "exact",
          "All n+2 coefficients with signs (-1)^(i(n+1)); exact values as canonical strings.");
    m.def("verify", &verify_impl, py::arg("points"), py::arg("backend") = "exact",
          py::arg("tolerance") = 1e-9,
          "Evaluate the weighted point sum and the coefficient sum with a pass/fail verdict.");
    m.def(
        "delta",
        [](const PyPoints& pts, std::size_t i, const std::string& backend) {
            return delta_impl(pts, i, backend, false);
        },
        py::arg("points"), py::arg("index"), py::arg("backend") = "exact",
        "Coefficient of A_index via the edge-difference determinant.");
    m.def(
        "delta_expanded",
        [](const PyPoints& pts, std::size_t i, const std::string& backend) {
            return delta_impl(pts, i, backend, true);
        },
        py::arg("points"), py::arg("index"), py::arg("backend") = "exact",
        "Same coefficient via the alternating sum of raw point-column determinants.");
    m.def("barycentric", &barycentric_impl, py::arg("simplex"), py::arg("point"),
          py::arg("backend") = "exact",
          "Barycentric coordinates of point w.r.t. an n-simplex of n+1 vertices.");
    m.def("is_degenerate_simplex", &degenerate_impl, py::arg("simplex"), py::arg("backend") = "exact",
          "(degenerate, witness determinant) for n+1 points in R^n.");
    m.def("dependence_certificate", &certificate_impl, py::arg("points"),
          "Nontrivial affine dependence among n+2 points (exact backend).");
    m.def("nullspace_oracle", &nullspace_impl, py::arg("points"),
          "Independent dependence coefficients from exact Gaussian elimination.");
    m.def("run_suite", &suite_impl, py::arg("dim_lo") = 1, py::arg("dim_hi") = 6,
          py::arg("trials") = 100, py::arg("seed") = 42,
          "Randomized metamorphic property suite; failures are returned, not raised.");
    m.def("generate_configuration", &generate_impl, py::arg("dimension"), py::arg("distribution"),
          py::arg("seed"),
          "Reproducible random configuration; distribution is small_integer, bounded_rational or near_degenerate.");
}
