// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "commands.hpp"

#include <fracdisc/fracdisc.hpp>

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace fracdisc;
using fracdisc::testing::forward_euler;
using fracdisc::testing::max_relative_difference;
using fracdisc::testing::relative_difference;
namespace fs = std::filesystem;

struct Outcome {
    bool ok;
    std::string detail;
};

const FdeProblem& linear_benchmark() {
    static const FdeProblem problem = linear_problem(0.5, 1.0, 1.0);
    return problem;
}

const ReferenceSolution& linear_exact() {
    static const ReferenceSolution exact = exact_linear(0.5, 1.0, 1.0);
    return exact;
}

std::string fmt(const char* format, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, format, value);
    return buffer;
}

double quadrature_gap(const FdeProblem& problem, const TimeGrid& grid) {
    const Trajectory run = solve_pwc(problem, grid);
    const ReferenceSolution quad = quadrature_reference(problem, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        worst = std::max(worst, relative_difference(run.state(k)[0], quad(grid[k])[0]));
    }
    return worst;
}

Outcome quadrature_equivalence() {
    double worst = quadrature_gap(linear_benchmark(), uniform_grid(0.25, 12));
    std::mt19937_64 rng(20170);
    std::uniform_real_distribution<double> order(0.05, 1.0);
    std::uniform_real_distribution<double> start(0.0, 1.8);
    std::uniform_int_distribution<std::size_t> steps(1, 64);
    for (int trial = 0; trial < 20; ++trial) {
        const double alpha = order(rng);
        const double x0 = start(rng);
        const std::size_t n = steps(rng);
        const FdeProblem problem =
            (trial % 2 == 0) ? linear_problem(alpha, 1.0, x0) : riccati_problem(alpha, 1.0, x0);
        worst = std::max(worst, quadrature_gap(problem, uniform_grid(3.0 / n, n)));
    }
    return {worst <= 1e-12, "max relative gap " + fmt("%.3g", worst)};
}

Outcome euler_reduction() {
    constexpr double h = 0.01;
    constexpr std::size_t steps = 100;
    double worst = 0.0;
    for (const FdeProblem& problem : {linear_problem(1.0, 1.0, 1.0), riccati_problem(1.0, 1.0, 0.5)}) {
        const auto euler = forward_euler(problem, h, steps);
        const TimeGrid grid = uniform_grid(h, steps);
        for (auto kind : {SchemeKind::PwcIntegrablization, SchemeKind::GrunwaldLetnikov, SchemeKind::ElSayed}) {
            worst = std::max(worst, max_relative_difference(solve(kind, problem, grid).states(), euler));
        }
    }
    return {worst <= 1e-12, "max relative gap " + fmt("%.3g", worst)};
}

Outcome mittag_leffler_checks() {
    double worst_exp = 0.0;
    double worst_erfc = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = -3.0 + 4.0 * i / 49.0;
        worst_exp = std::max(worst_exp, std::fabs(mittag_leffler(1.0, z) - std::exp(z)) / std::exp(z));
        const double x = 3.0 * i / 49.0;
        worst_erfc = std::max(worst_erfc, std::fabs(mittag_leffler(0.5, -x) - std::exp(x * x) * std::erfc(x)));
    }
    return {worst_exp <= 1e-10 && worst_erfc <= 1e-10,
            "E_1 rel " + fmt("%.3g", worst_exp) + ", E_1/2 abs " + fmt("%.3g", worst_erfc)};
}

Outcome pwc_convergence() {
    const std::vector<double> dts{0.25, 0.125, 0.0625, 0.03125, 0.015625};
    const ConvergenceTable table = convergence_study(linear_benchmark(), linear_exact(), 3.0, dts);
    bool decreasing = true;
    std::string errors;
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        if (k > 0 && !(table.rows[k].max_abs_error < table.rows[k - 1].max_abs_error)) {
            decreasing = false;
        }
        errors += (k ? " " : "") + fmt("%.3g", table.rows[k].max_abs_error);
    }
    const double gain = table.rows.front().max_abs_error / table.rows.back().max_abs_error;
    return {decreasing && gain > 10.0, "errors at t=3: " + errors + ", gain " + fmt("%.3g", gain)};
}

Outcome el_sayed_non_convergence() {
    const FdeProblem problem = riccati_problem(0.8, 1.0, 0.5);
    constexpr double t = 0.5;
    constexpr double dt = 1e-3;
    const TimeGrid grid = uniform_grid(dt, 500);
    const double reference = fine_grid_reference(problem, t)(t)[0];
    const double el = solve_el_sayed(problem, grid).states().back()[0];
    const double pwc = solve_pwc(problem, grid).states().back()[0];
    const double el_error = std::fabs(el - reference);
    const double pwc_error = std::fabs(pwc - reference);
    const bool overshoots = std::fabs(el - 1.0) < std::fabs(reference - 1.0);
    return {el_error > 10.0 * pwc_error && overshoots,
            "reference " + fmt("%.6f", reference) + ", el-sayed " + fmt("%.6f", el) + " (error " +
                fmt("%.3g", el_error) + "), pwc error " + fmt("%.3g", pwc_error)};
}

Outcome nonuniform_grids() {
    // (a) the non-uniform recursion on uniform times is the uniform recursion
    bool bitwise = true;
    for (const FdeProblem& problem : {linear_benchmark(), riccati_problem(0.8, 1.0, 0.5)}) {
        const TimeGrid grid = uniform_grid(0.25, 12);
        bitwise = bitwise && solve_pwc(problem, grid).states() == solve_pwc_nonuniform(problem, grid).states();
    }

    // (b) the ramp refines the early interval
    const ResidualReport uniform = residuals(solve_pwc(linear_benchmark(), uniform_grid(0.25, 12)), linear_exact());
    const ResidualReport ramp = residuals(solve_pwc(linear_benchmark(), ramp_grid(0.25, 12)), linear_exact());
    const bool early = ramp.at_first_quarter_max < uniform.at_first_quarter_max;

    // (c) random grids stay within 5x of the uniform error
    double worst_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const double random =
            residuals(solve_pwc(linear_benchmark(), random_grid(0.25, 12, seed)), linear_exact()).max_abs;
        worst_ratio = std::max(worst_ratio, random / uniform.max_abs);
    }
    const bool robust = worst_ratio <= 5.0;

    return {bitwise && early && robust,
            std::string("(a) ") + (bitwise ? "bitwise" : "differs") + ", (b) early max ramp " +
                fmt("%.4g", ramp.at_first_quarter_max) + " vs uniform " + fmt("%.4g", uniform.at_first_quarter_max) +
                ", (c) worst random/uniform " + fmt("%.3g", worst_ratio)};
}

Outcome gl_pwc_parity() {
    const TimeGrid grid = uniform_grid(0.25, 12);
    const double gl = residuals(solve_gl(linear_benchmark(), grid), linear_exact()).max_abs;
    const double pwc = residuals(solve_pwc(linear_benchmark(), grid), linear_exact()).max_abs;
    const double ratio = std::max(gl, pwc) / std::min(gl, pwc);
    return {ratio <= 3.0, "gl " + fmt("%.5g", gl) + ", pwc " + fmt("%.5g", pwc) + ", ratio " + fmt("%.3g", ratio)};
}

std::string slurp(const fs::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

Outcome figure_data() {
    const fs::path root = fs::temp_directory_path() / ("fracdisc_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    struct Cleanup {
        fs::path path;
        ~Cleanup() { fs::remove_all(path); }
    } cleanup{root};

    bool identical = true;
    std::vector<fs::path> fig2;
    for (auto which : {cli::FigureKind::Fig1, cli::FigureKind::Fig2}) {
        const auto first = cli::write_figure(which, root / "a");
        const auto second = cli::write_figure(which, root / "b");
        if (first.size() != second.size()) {
            identical = false;
            continue;
        }
        for (std::size_t i = 0; i < first.size(); ++i) {
            identical = identical && slurp(first[i]) == slurp(second[i]);
        }
        if (which == cli::FigureKind::Fig2) {
            fig2 = first;
        }
    }

    std::set<std::string> names;
    for (const auto& path : fig2) {
        names.insert(path.filename().string());
    }
    const std::set<std::string> expected{"fig2_gl.csv",
                                         "fig2_pwc_uniform.csv",
                                         "fig2_pwc_random.csv",
                                         "fig2_pwc_ramp.csv",
                                         "fig2_residuals_gl.csv",
                                         "fig2_residuals_pwc_uniform.csv",
                                         "fig2_residuals_pwc_random.csv",
                                         "fig2_residuals_pwc_ramp.csv",
                                         "fig2_exact.csv"};
    const bool file_set = names == expected && fig2.size() == expected.size();

    const auto golden = fracdisc::testing::load_golden();
    double worst = 0.0;
    bool shapes = true;
    for (const char* key : {"gl", "pwc_uniform", "pwc_random", "pwc_ramp"}) {
        const auto values = golden.at(key).at("residuals").get<std::vector<double>>();
        std::istringstream csv(slurp(root / "a" / (std::string("fig2_residuals_") + key + ".csv")));
        std::string line;
        std::getline(csv, line);  // header
        std::size_t n = 0;
        double max_abs = 0.0;
        for (; std::getline(csv, line); ++n) {
            const double value = std::stod(line.substr(line.rfind(',') + 1));
            if (n < values.size()) {
                worst = std::max(worst, std::fabs(value - values[n]));
            }
            max_abs = std::max(max_abs, std::fabs(value));
        }
        shapes = shapes && n == values.size();
        worst = std::max(worst, std::fabs(max_abs - golden.at(key).at("max_abs").get<double>()));
    }
    const bool golden_ok = shapes && worst <= 1e-12;

    return {identical && file_set && golden_ok,
            std::string(identical ? "byte-identical" : "runs differ") + ", " +
                (file_set ? "fig2 file set ok" : "fig2 file set wrong") + ", golden max gap " + fmt("%.3g", worst)};
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"quadrature-equivalence", 1.0, quadrature_equivalence},
        {"euler-reduction", 1.0, euler_reduction},
        {"mittag-leffler", 1.0, mittag_leffler_checks},
        {"pwc-convergence", 10.0, pwc_convergence},
        {"el-sayed-non-convergence", 10.0, el_sayed_non_convergence},
        {"nonuniform-grids", 5.0, nonuniform_grids},
        {"gl-pwc-parity", 1.0, gl_pwc_parity},
        {"figure-data", 10.0, figure_data},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool pass = outcome.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s %zu %s: %s [%.3fs%s]\n", pass ? "PASS" : "FAIL", i + 1, c.name, outcome.detail.c_str(),
                    seconds, in_time ? "" : " over budget");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
