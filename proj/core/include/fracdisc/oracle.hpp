#pragma once

#include "fracdisc/fde_core.hpp"
#include "fracdisc/special_functions.hpp"

#include <cstddef>
#include <functional>

namespace fracdisc {

enum class ReferenceKind { ExactLinear, Quadrature, FineGrid };

/// A reference solution t -> x(t) with eval(0) == x0.
class ReferenceSolution {
public:
    using Evaluator = std::function<State(double t)>;

    ReferenceSolution(ReferenceKind kind, Evaluator eval) : kind_(kind), eval_(std::move(eval)) {}

    [[nodiscard]] ReferenceKind kind() const noexcept { return kind_; }
    [[nodiscard]] State operator()(double t) const { return eval_(t); }

private:
    ReferenceKind kind_;
    Evaluator eval_;
};

/// x0 E_alpha(-c t^alpha), the solution of D^alpha x = -c x.
/// Throws std::domain_error unless 0 < alpha <= 1 and c > 0; evaluation may throw NonConvergence.
[[nodiscard]] ReferenceSolution exact_linear(double alpha, double c, double x0,
                                             const MLEvalConfig& config = {});

/// Exact solution of the integrablized problem, computed as the fractional integral
///
///   x(t) = x0 + sum_m f_m [(t - tau_m)^alpha - (t - min(t, tau_{m+1}))^alpha] / Gamma(1 + alpha)
///
/// of the piecewise-constant field f_m = f(tau_m, x_m) over [tau_m, tau_{m+1}),
/// with the last piece open-ended. The states x_m come from a solve_pwc run on
/// `grid`; no kernel or convolution code is shared with the scheme itself.
/// Evaluation is defined for t >= 0.
[[nodiscard]] ReferenceSolution quadrature_reference(const FdeProblem& problem, const TimeGrid& grid);

/// Minimum and default step counts for fine_grid_reference.
inline constexpr std::size_t kMinFineGridSteps = std::size_t{1} << 12;
inline constexpr std::size_t kDefaultFineGridSteps = std::size_t{1} << 14;

/// Piecewise-linear interpolant of a solve_pwc run with `refinement` uniform steps
/// on [0, t_end]. A numerical reference only, not ground truth.
/// Throws std::domain_error if refinement < kMinFineGridSteps or t_end <= 0;
/// evaluation outside [0, t_end] throws std::domain_error.
[[nodiscard]] ReferenceSolution fine_grid_reference(const FdeProblem& problem, double t_end,
                                                    std::size_t refinement = kDefaultFineGridSteps);

/// Piecewise-linear interpolant through a trajectory's grid points (kind FineGrid).
[[nodiscard]] ReferenceSolution trajectory_interpolant(const Trajectory& trajectory);

}  // namespace fracdisc
