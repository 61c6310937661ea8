#include "fracdisc/schemes.hpp"

#include "fracdisc/errors.hpp"
#include "fracdisc/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracdisc {

namespace {

// Evaluates f and rejects malformed or non-finite output.
State checked_field(const FdeProblem& problem, double t, const State& x, std::size_t step) {
    State f = problem.field(t, x);
    if (f.size() != problem.dimension()) {
        throw SchemeFailure(step, "vector field returned dimension " + std::to_string(f.size()) +
                                      ", expected " + std::to_string(problem.dimension()));
    }
    for (double v : f) {
        if (!std::isfinite(v)) {
            throw SchemeFailure(step, "vector field returned a non-finite value");
        }
    }
    return f;
}

void check_state(const State& x, std::size_t step) {
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw SchemeFailure(step, "state became non-finite");
        }
    }
}

double require_uniform(const TimeGrid& grid, const char* scheme) {
    const double h = grid.increment(1);
    if (grid.uniform_step()) {
        return h;
    }
    for (std::size_t i = 2; i <= grid.steps(); ++i) {
        if (std::fabs(grid.increment(i) - h) > kUniformStepTolerance * h) {
            std::ostringstream os;
            os << scheme << ": grid is not uniform (increment " << i << " is "
               << grid.increment(i) << ", first increment is " << h << ")";
            throw NonUniformGrid(os.str());
        }
    }
    return h;
}

// kernel(n, m) must return K(tau_n - tau_m); it is called with m = 0..n-1 in order.
template <class Kernel>
Trajectory run_pwc(const FdeProblem& problem, const TimeGrid& grid, Kernel&& kernel) {
    const std::size_t d = problem.dimension();
    const std::size_t n_steps = grid.steps();
    const State& x0 = problem.x0();

    std::vector<State> states;
    states.reserve(n_steps + 1);
    states.push_back(x0);

    const State f0 = checked_field(problem, grid[0], x0, 0);
    State f_prev = f0;
    // Row m holds f(tau_m, x_m) - f(tau_{m-1}, x_{m-1}); row 0 is unused.
    std::vector<double> jumps(n_steps * d, 0.0);

    for (std::size_t n = 1; n <= n_steps; ++n) {
        State x(d);
        const double w0 = kernel(n, 0);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = x0[i] + w0 * f0[i];
        }
        for (std::size_t m = 1; m < n; ++m) {
            const double w = kernel(n, m);
            const double* jump = &jumps[m * d];
            for (std::size_t i = 0; i < d; ++i) {
                x[i] += w * jump[i];
            }
        }
        check_state(x, n);

        if (n < n_steps) {
            State f = checked_field(problem, grid[n], x, n);
            for (std::size_t i = 0; i < d; ++i) {
                jumps[n * d + i] = f[i] - f_prev[i];
            }
            f_prev = std::move(f);
        }
        states.push_back(std::move(x));
    }
    return Trajectory(grid, std::move(states), SchemeKind::PwcIntegrablization);
}

}  // namespace

GlWeights gl_weights(double alpha, std::size_t n) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("gl_weights: alpha must satisfy 0 < alpha <= 1");
    }
    GlWeights out{alpha, std::vector<double>(n + 1)};
    out.weights[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m) {
        const double md = static_cast<double>(m);
        out.weights[m] = out.weights[m - 1] * (md - 1.0 - alpha) / md;
    }
    return out;
}

Trajectory solve_pwc(const FdeProblem& problem, const TimeGrid& grid) {
    if (!grid.uniform_step()) {
        return solve_pwc_nonuniform(problem, grid);
    }
    const double alpha = problem.alpha();
    const double g = gamma(1.0 + alpha);
    // K at lag k * dt; grid time tau_k is exactly k * dt on a uniform grid.
    std::vector<double> lag_kernel(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        lag_kernel[k] = std::pow(grid[k], alpha) / g;
    }
    return run_pwc(problem, grid,
                   [&](std::size_t n, std::size_t m) { return lag_kernel[n - m]; });
}

Trajectory solve_pwc_nonuniform(const FdeProblem& problem, const TimeGrid& grid) {
    const double alpha = problem.alpha();
    const double g = gamma(1.0 + alpha);
    const auto times = grid.times();
    return run_pwc(problem, grid, [&](std::size_t n, std::size_t m) {
        return std::pow(times[n] - times[m], alpha) / g;
    });
}

Trajectory solve_gl(const FdeProblem& problem, const TimeGrid& grid) {
    const double h = require_uniform(grid, "solve_gl");
    const double alpha = problem.alpha();
    const std::size_t d = problem.dimension();
    const std::size_t n_steps = grid.steps();
    const State& x0 = problem.x0();
    const GlWeights g = gl_weights(alpha, n_steps);
    const double h_alpha = std::pow(h, alpha);

    std::vector<State> states;
    states.reserve(n_steps + 1);
    states.push_back(x0);

    for (std::size_t n = 1; n <= n_steps; ++n) {
        const State f = checked_field(problem, grid[n - 1], states[n - 1], n - 1);
        State x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = x0[i] + h_alpha * f[i];
        }
        // The m = n term multiplies x_0 - x0 = 0 and is omitted.
        for (std::size_t m = 1; m < n; ++m) {
            const State& past = states[n - m];
            for (std::size_t i = 0; i < d; ++i) {
                x[i] -= g.weights[m] * (past[i] - x0[i]);
            }
        }
        check_state(x, n);
        states.push_back(std::move(x));
    }
    return Trajectory(grid, std::move(states), SchemeKind::GrunwaldLetnikov);
}

Trajectory solve_el_sayed(const FdeProblem& problem, const TimeGrid& grid) {
    const double h = require_uniform(grid, "solve_el_sayed");
    const std::size_t d = problem.dimension();
    const std::size_t n_steps = grid.steps();
    const double coefficient = std::pow(h, problem.alpha()) / gamma(1.0 + problem.alpha());

    std::vector<State> states;
    states.reserve(n_steps + 1);
    states.push_back(problem.x0());

    for (std::size_t n = 0; n < n_steps; ++n) {
        const State& current = states[n];
        const State f = checked_field(problem, grid[n], current, n);
        State x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = current[i] + coefficient * f[i];
        }
        check_state(x, n + 1);
        states.push_back(std::move(x));
    }
    return Trajectory(grid, std::move(states), SchemeKind::ElSayed);
}

Trajectory solve(SchemeKind kind, const FdeProblem& problem, const TimeGrid& grid) {
    switch (kind) {
        case SchemeKind::PwcIntegrablization: return solve_pwc(problem, grid);
        case SchemeKind::GrunwaldLetnikov: return solve_gl(problem, grid);
        case SchemeKind::ElSayed: return solve_el_sayed(problem, grid);
    }
    throw std::invalid_argument("solve: unknown scheme");
}

}  // namespace fracdisc
