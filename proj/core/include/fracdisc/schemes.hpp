#pragma once

#include "fracdisc/fde_core.hpp"

#include <cstddef>
#include <vector>

namespace fracdisc {

/// Signed binomial weights g_m = (-1)^m binom(alpha, m), m = 0..n.
struct GlWeights {
    double alpha;
    std::vector<double> weights;
};

/// g_0 = 1, g_m = g_{m-1} (m - 1 - alpha) / m. Throws std::domain_error unless 0 < alpha <= 1.
[[nodiscard]] GlWeights gl_weights(double alpha, std::size_t n);

/// Relative tolerance on increments for schemes that require a uniform grid.
inline constexpr double kUniformStepTolerance = 1e-12;

/// Piecewise-constant integrablization. For n >= 1,
///
///   x(tau_n) = x0 + K(tau_n) f(tau_0, x0)
///            + sum_{m=1}^{n-1} K(tau_n - tau_m) [f(tau_m, x_m) - f(tau_{m-1}, x_{m-1})],
///
/// with K(s) = s^alpha / Gamma(1 + alpha). The scheme is explicit; the field is
/// evaluated once at each of tau_0..tau_{N-1}. Grids flagged uniform use kernel
/// values K(tau_k) precomputed once per lag k; otherwise each K(tau_n - tau_m) is
/// computed on demand.
///
/// Throws SchemeFailure (with the step index) on non-finite field output or state.
[[nodiscard]] Trajectory solve_pwc(const FdeProblem& problem, const TimeGrid& grid);

/// solve_pwc that always takes the general non-uniform path, K(tau_n - tau_m) per pair.
[[nodiscard]] Trajectory solve_pwc_nonuniform(const FdeProblem& problem, const TimeGrid& grid);

/// Explicit Grunwald-Letnikov comparator on a uniform grid of step h:
///
///   x_n = x0 + h^alpha f(tau_{n-1}, x_{n-1}) - sum_{m=1}^{n-1} g_m (x_{n-m} - x0).
///
/// Throws NonUniformGrid when increments differ from tau_1 by more than kUniformStepTolerance.
[[nodiscard]] Trajectory solve_gl(const FdeProblem& problem, const TimeGrid& grid);

/// First-order comparator x_{n+1} = x_n + h^alpha / Gamma(1 + alpha) f(tau_n, x_n).
/// It does not converge to the Caputo solution for alpha < 1 and exists for comparison only.
[[nodiscard]] Trajectory solve_el_sayed(const FdeProblem& problem, const TimeGrid& grid);

[[nodiscard]] Trajectory solve(SchemeKind kind, const FdeProblem& problem, const TimeGrid& grid);

}  // namespace fracdisc
