#include "fracdisc/analysis.hpp"

#include "fracdisc/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace fracdisc {

namespace {

double inf_norm_difference(const State& a, const State& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("residuals: reference dimension does not match trajectory");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out = std::max(out, std::fabs(a[i] - b[i]));
    }
    return out;
}

constexpr double kDivisibilityTolerance = 1e-9;

}  // namespace

ResidualReport residuals(const Trajectory& trajectory, const ReferenceSolution& reference) {
    ResidualReport report;
    const auto times = trajectory.grid().times();
    const double quarter = trajectory.grid().final_time() / 4.0;
    report.grid_times.assign(times.begin(), times.end());
    report.residuals.reserve(times.size());

    for (std::size_t n = 0; n < times.size(); ++n) {
        const State& x = trajectory.state(n);
        const State r = reference(times[n]);
        const double magnitude = inf_norm_difference(x, r);

        State diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            diff[i] = x[i] - r[i];
        }
        report.residuals.push_back(std::move(diff));
        report.max_abs = std::max(report.max_abs, magnitude);
        if (times[n] <= quarter) {
            report.at_first_quarter_max = std::max(report.at_first_quarter_max, magnitude);
        }
    }
    return report;
}

ConvergenceTable convergence_study(const FdeProblem& problem, const ReferenceSolution& reference,
                                   double t_end, std::span<const double> dts, SchemeKind scheme) {
    if (dts.empty()) {
        throw std::domain_error("convergence_study: need at least one step size");
    }
    if (!(t_end > 0.0)) {
        throw std::domain_error("convergence_study: t_end must be positive");
    }
    std::vector<std::size_t> steps;
    for (std::size_t k = 0; k < dts.size(); ++k) {
        const double dt = dts[k];
        if (!(dt > 0.0) || (k > 0 && !(dt < dts[k - 1]))) {
            throw std::domain_error("convergence_study: dts must be positive and strictly decreasing");
        }
        const double n = std::round(t_end / dt);
        if (n < 1.0 || std::fabs(n * dt - t_end) > kDivisibilityTolerance * t_end) {
            std::ostringstream os;
            os << "convergence_study: dt = " << dt << " does not divide t_end = " << t_end;
            throw std::domain_error(os.str());
        }
        steps.push_back(static_cast<std::size_t>(n));
    }

    std::vector<std::future<double>> errors;
    errors.reserve(dts.size());
    for (std::size_t k = 0; k < dts.size(); ++k) {
        errors.push_back(std::async(std::launch::async, [&, k] {
            const Trajectory run = solve(scheme, problem, uniform_grid(dts[k], steps[k]));
            const double t = run.grid().final_time();
            return inf_norm_difference(run.states().back(), reference(t));
        }));
    }

    ConvergenceTable table;
    for (std::size_t k = 0; k < dts.size(); ++k) {
        ConvergenceRow row{dts[k], errors[k].get(), std::nullopt};
        if (k > 0) {
            row.observed_ratio = table.rows.back().max_abs_error / row.max_abs_error;
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace fracdisc
