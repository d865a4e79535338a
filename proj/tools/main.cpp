#include "simplexsum/applications.hpp"
#include "simplexsum/errors.hpp"
#include "simplexsum/identity.hpp"
#include "simplexsum/io.hpp"
#include "simplexsum/verification.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using simplexsum::Configuration;
using simplexsum::Rational;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json rational_strings(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    return arr;
}

json doubles(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(v);
    return arr;
}

void emit(json& report, double runtime_ms, const std::string& out_path) {
    report["runtime_ms"] = runtime_ms;
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            throw simplexsum::ParseError("cannot write '" + out_path + "'");
        }
        out << text;
    }
}

struct CommonOptions {
    std::string input;
    std::string backend = "exact";
    double tolerance = 1e-9;
    std::string out;
};

int cmd_verify(const CommonOptions& opt) {
    const Configuration<Rational> cfg = simplexsum::io::to_configuration(
        simplexsum::io::read_point_file(opt.input));
    json report;
    report["command"] = "verify";
    report["backend"] = opt.backend;

    Stopwatch timer;
    bool pass = false;
    if (opt.backend == "exact") {
        const auto coeffs = simplexsum::coefficients(cfg);
        const auto res = simplexsum::residual(cfg);
        pass = res.pass;
        report["coefficients"] = rational_strings(coeffs.signed_coeffs);
        report["residual_vector"] = rational_strings(res.vector);
        report["residual_scalar"] = res.scalar.to_string();
        report["verdict"] = pass ? "pass" : "fail";
        report["tolerance"] = "exact";
    } else {
        const Configuration<double> fcfg = simplexsum::to_float(cfg);
        const auto coeffs = simplexsum::coefficients(fcfg);
        const auto res = simplexsum::residual(fcfg, {opt.tolerance});
        pass = res.pass;
        report["coefficients"] = doubles(coeffs.signed_coeffs);
        report["residual_vector"] = doubles(res.vector);
        report["residual_scalar"] = res.scalar;
        report["verdict"] = pass ? "pass" : "fail";
        report["tolerance"] = opt.tolerance;
        report["relative_residual"] = res.relative_residual.value_or(0.0);
    }
    emit(report, timer.elapsed_ms(), opt.out);
    return pass ? kExitPass : kExitVerificationFailure;
}

int cmd_barycentric(const CommonOptions& opt, const std::string& point_text) {
    const auto simplex = simplexsum::io::to_simplex(simplexsum::io::read_point_file(opt.input));
    const auto point = simplexsum::io::parse_coordinates(point_text);

    json report;
    report["command"] = "barycentric";
    report["backend"] = opt.backend;

    Stopwatch timer;
    try {
        if (opt.backend == "exact") {
            const auto coords = simplexsum::barycentric(simplex, point);
            Rational lambda_sum(0);
            std::vector<Rational> rebuilt(point.size(), Rational(0));
            for (std::size_t k = 0; k < coords.lambdas.size(); ++k) {
                lambda_sum += coords.lambdas[k];
                for (std::size_t r = 0; r < point.size(); ++r) {
                    rebuilt[r] += coords.lambdas[k] * simplex[k][r];
                }
            }
            report["lambdas"] = rational_strings(coords.lambdas);
            report["lambda_sum"] = lambda_sum.to_string();
            report["reconstructed_point"] = rational_strings(rebuilt);
            report["reconstruction_exact"] = rebuilt == point;
            report["verdict"] = rebuilt == point ? "pass" : "fail";
            report["tolerance"] = "exact";
            emit(report, timer.elapsed_ms(), opt.out);
            return rebuilt == point ? kExitPass : kExitVerificationFailure;
        }

        std::vector<std::vector<double>> fsimplex;
        for (const auto& v : simplex) {
            std::vector<double> fv;
            for (const auto& c : v) fv.push_back(c.to_double());
            fsimplex.push_back(std::move(fv));
        }
        std::vector<double> fpoint;
        for (const auto& c : point) fpoint.push_back(c.to_double());

        const auto coords = simplexsum::barycentric(fsimplex, fpoint);
        double lambda_sum = 0.0;
        std::vector<double> rebuilt(fpoint.size(), 0.0);
        double scale = 0.0;
        for (std::size_t k = 0; k < coords.lambdas.size(); ++k) {
            lambda_sum += coords.lambdas[k];
            for (std::size_t r = 0; r < fpoint.size(); ++r) {
                rebuilt[r] += coords.lambdas[k] * fsimplex[k][r];
                scale = std::max(scale, std::fabs(coords.lambdas[k] * fsimplex[k][r]));
            }
        }
        double max_err = std::fabs(lambda_sum - 1.0);
        for (std::size_t r = 0; r < fpoint.size(); ++r) {
            max_err = std::max(max_err, std::fabs(rebuilt[r] - fpoint[r]));
        }
        const bool pass = max_err <= opt.tolerance * std::max(1.0, scale);
        report["lambdas"] = doubles(coords.lambdas);
        report["lambda_sum"] = lambda_sum;
        report["reconstructed_point"] = doubles(rebuilt);
        report["reconstruction_error"] = max_err;
        report["verdict"] = pass ? "pass" : "fail";
        report["tolerance"] = opt.tolerance;
        emit(report, timer.elapsed_ms(), opt.out);
        return pass ? kExitPass : kExitVerificationFailure;
    } catch (const simplexsum::DegenerateSimplexError& e) {
        report["verdict"] = "degenerate";
        report["error"] = e.what();
        emit(report, timer.elapsed_ms(), opt.out);
        return kExitVerificationFailure;
    }
}

int cmd_delta(const CommonOptions& opt, std::size_t index) {
    const Configuration<Rational> cfg = simplexsum::io::to_configuration(
        simplexsum::io::read_point_file(opt.input));
    if (index >= cfg.point_count()) {
        throw simplexsum::DimensionMismatchError("index " + std::to_string(index) +
                                                 " out of range 0.." +
                                                 std::to_string(cfg.point_count() - 1));
    }

    json report;
    report["command"] = "delta";
    report["backend"] = opt.backend;
    report["index"] = index;

    Stopwatch timer;
    bool equal = false;
    if (opt.backend == "exact") {
        const Rational direct = simplexsum::delta(cfg, index);
        const Rational expanded = simplexsum::delta_expanded(cfg, index);
        equal = direct == expanded;
        report["delta"] = direct.to_string();
        report["delta_expanded"] = expanded.to_string();
        report["paths_agree"] = equal;
        report["verdict"] = equal ? "pass" : "fail";
        report["tolerance"] = "exact";
    } else {
        const Configuration<double> fcfg = simplexsum::to_float(cfg);
        const double direct = simplexsum::delta(fcfg, index);
        const double expanded = simplexsum::delta_expanded(fcfg, index);
        equal = std::fabs(direct - expanded) <=
                opt.tolerance * std::max({1.0, std::fabs(direct), std::fabs(expanded)});
        report["delta"] = direct;
        report["delta_expanded"] = expanded;
        report["paths_agree"] = equal;
        report["verdict"] = equal ? "pass" : "fail";
        report["tolerance"] = opt.tolerance;
    }
    emit(report, timer.elapsed_ms(), opt.out);
    return equal ? kExitPass : kExitVerificationFailure;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t d = std::stoul(text);
            return {d, d};
        }
        return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw simplexsum::ParseError("cannot parse dimension range '" + text + "' (expected a..b)");
    }
}

int cmd_suite(const std::string& dims_text, std::size_t trials, std::uint64_t seed,
              const std::string& out_path) {
    const auto [dim_lo, dim_hi] = parse_dims(dims_text);
    if (trials < 1) {
        throw simplexsum::ParseError("--trials must be at least 1");
    }

    json report;
    report["command"] = "suite";
    report["backend"] = "exact+float";
    report["dims"] = dims_text;
    report["trials_per_dim"] = trials;
    report["seed"] = seed;

    Stopwatch timer;
    const simplexsum::TrialReport result = simplexsum::run_property_suite(dim_lo, dim_hi, trials, seed);
    report["trial_count"] = result.trial_count;
    report["max_float_residual"] = result.max_float_residual;
    json failures = json::array();
    for (const auto& f : result.failures) {
        json entry;
        entry["dimension"] = f.dimension;
        entry["trial"] = f.trial;
        entry["operation"] = f.operation;
        entry["detail"] = f.detail;
        entry["configuration"] = json::parse(f.config_json);
        failures.push_back(std::move(entry));
    }
    report["failures"] = std::move(failures);
    report["verdict"] = result.failures.empty() ? "pass" : "fail";
    emit(report, timer.elapsed_ms(), out_path);
    return result.failures.empty() ? kExitPass : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed simplex-volume coefficients and affine-dependence checks for n+2 points in R^n"};
    app.require_subcommand(1);

    CommonOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "evaluate the coefficient identity for a point file");
    verify->add_option("--input", verify_opt.input, "point file (.json or .csv), n+2 points")->required();
    verify->add_option("--backend", verify_opt.backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--tolerance", verify_opt.tolerance, "float backend residual tolerance");
    verify->add_option("--out", verify_opt.out, "also write the report here");

    CommonOptions bary_opt;
    std::string bary_point;
    auto* bary = app.add_subcommand("barycentric", "barycentric coordinates of a point in a simplex");
    bary->add_option("--simplex", bary_opt.input, "simplex file (.json or .csv), n+1 points")->required();
    bary->add_option("--point", bary_point, "query point, comma-separated coordinates")->required();
    bary->add_option("--backend", bary_opt.backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    bary->add_option("--tolerance", bary_opt.tolerance, "float backend reconstruction tolerance");
    bary->add_option("--out", bary_opt.out, "also write the report here");

    CommonOptions delta_opt;
    std::size_t delta_index = 0;
    auto* delta = app.add_subcommand("delta", "one coefficient through both computation paths");
    delta->add_option("--input", delta_opt.input, "point file (.json or .csv), n+2 points")->required();
    delta->add_option("--index", delta_index, "coefficient index in 0..n+1")->required();
    delta->add_option("--backend", delta_opt.backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    delta->add_option("--tolerance", delta_opt.tolerance, "float backend agreement tolerance");
    delta->add_option("--out", delta_opt.out, "also write the report here");

    std::string suite_dims = "1..6";
    std::size_t suite_trials = 100;
    std::uint64_t suite_seed = 42;
    std::string suite_out;
    auto* suite = app.add_subcommand("suite", "randomized metamorphic property suite");
    suite->add_option("--dims", suite_dims, "dimension range a..b");
    suite->add_option("--trials", suite_trials, "trials per dimension");
    suite->add_option("--seed", suite_seed, "generator seed");
    suite->add_option("--out", suite_out, "also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (bary->parsed()) return cmd_barycentric(bary_opt, bary_point);
        if (delta->parsed()) return cmd_delta(delta_opt, delta_index);
        if (suite->parsed()) return cmd_suite(suite_dims, suite_trials, suite_seed, suite_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
