#include "fracdisc/oracle.hpp"

#include "fracdisc/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracdisc {

namespace {

struct PiecewiseField {
    double alpha;
    double gamma_1a;
    State x0;
    std::vector<double> starts;   // tau_m
    std::vector<State> values;    // f(tau_m, x_m)
};

struct Samples {
    std::vector<double> times;
    std::vector<State> states;
};

// Tolerance on the right end absorbs (t_end / N) * N != t_end rounding.
constexpr double kEndSlack = 1e-12;

State interpolate(const Samples& s, double t) {
    if (t > s.times.back() && t <= s.times.back() * (1.0 + kEndSlack)) {
        return s.states.back();
    }
    if (!(t >= s.times.front() && t <= s.times.back())) {
        std::ostringstream os;
        os << "reference evaluated at t = " << t << " outside [" << s.times.front() << ", "
           << s.times.back() << "]";
        throw std::domain_error(os.str());
    }
    const auto upper = std::upper_bound(s.times.begin(), s.times.end(), t);
    if (upper == s.times.end()) {
        return s.states.back();
    }
    const std::size_t hi = static_cast<std::size_t>(upper - s.times.begin());
    const std::size_t lo = hi - 1;
    if (t == s.times[lo]) {
        return s.states[lo];
    }
    const double theta = (t - s.times[lo]) / (s.times[hi] - s.times[lo]);
    State out(s.states[lo].size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (1.0 - theta) * s.states[lo][i] + theta * s.states[hi][i];
    }
    return out;
}

}  // namespace

ReferenceSolution exact_linear(double alpha, double c, double x0, const MLEvalConfig& config) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("exact_linear: alpha must satisfy 0 < alpha <= 1");
    }
    if (!(c > 0.0)) {
        throw std::domain_error("exact_linear: c must be positive");
    }
    config.validate();
    return ReferenceSolution(ReferenceKind::ExactLinear, [=](double t) {
        if (t == 0.0) {
            return State{x0};
        }
        return State{x0 * mittag_leffler(alpha, -c * std::pow(t, alpha), config)};
    });
}

ReferenceSolution quadrature_reference(const FdeProblem& problem, const TimeGrid& grid) {
    const Trajectory run = solve_pwc(problem, grid);

    auto field = std::make_shared<PiecewiseField>();
    field->alpha = problem.alpha();
    field->gamma_1a = std::tgamma(1.0 + problem.alpha());
    field->x0 = problem.x0();
    field->starts.assign(grid.times().begin(), grid.times().end());
    field->values.reserve(grid.size());
    for (std::size_t m = 0; m < grid.size(); ++m) {
        field->values.push_back(problem.field(grid[m], run.state(m)));
    }

    return ReferenceSolution(ReferenceKind::Quadrature, [field](double t) {
        if (!(t >= 0.0)) {
            throw std::domain_error("quadrature_reference: t must be non-negative");
        }
        const double a = field->alpha;
        State x = field->x0;
        const std::size_t pieces = field->starts.size();
        for (std::size_t m = 0; m < pieces && field->starts[m] < t; ++m) {
            const double begin = field->starts[m];
            const double end = (m + 1 < pieces) ? std::min(t, field->starts[m + 1]) : t;
            // (1/Gamma(a)) * integral_{begin}^{end} (t - s)^(a - 1) ds
            const double weight =
                (std::pow(t - begin, a) - std::pow(t - end, a)) / field->gamma_1a;
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] += weight * field->values[m][i];
            }
        }
        return x;
    });
}

ReferenceSolution fine_grid_reference(const FdeProblem& problem, double t_end,
                                      std::size_t refinement) {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw std::domain_error("fine_grid_reference: t_end must be positive and finite");
    }
    if (refinement < kMinFineGridSteps) {
        std::ostringstream os;
        os << "fine_grid_reference: refinement " << refinement << " below the minimum "
           << kMinFineGridSteps;
        throw std::domain_error(os.str());
    }
    const Trajectory run =
        solve_pwc(problem, uniform_grid(t_end / static_cast<double>(refinement), refinement));
    return trajectory_interpolant(run);
}

ReferenceSolution trajectory_interpolant(const Trajectory& trajectory) {
    auto samples = std::make_shared<Samples>();
    samples->times.assign(trajectory.grid().times().begin(), trajectory.grid().times().end());
    samples->states = trajectory.states();
    return ReferenceSolution(ReferenceKind::FineGrid,
                             [samples](double t) { return interpolate(*samples, t); });
}

}  // namespace fracdisc
