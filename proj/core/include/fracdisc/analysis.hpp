#pragma once

#include "fracdisc/fde_core.hpp"
#include "fracdisc/oracle.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fracdisc {

/// Pointwise residuals state_n - reference(tau_n) and their summaries.
struct ResidualReport {
    std::vector<double> grid_times;
    std::vector<State> residuals;
    /// max over n and components of |residual|
    double max_abs = 0.0;
    /// max |residual| over grid points with tau_n <= final_time / 4
    double at_first_quarter_max = 0.0;
};

[[nodiscard]] ResidualReport residuals(const Trajectory& trajectory,
                                       const ReferenceSolution& reference);

struct ConvergenceRow {
    double dt;
    double max_abs_error;
    /// previous row's error divided by this row's; absent on the first row
    std::optional<double> observed_ratio;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

/// Runs `scheme` on uniform grids of n = round(t_end / dt) steps for each dt and
/// records the infinity-norm error against `reference` at the final grid time.
/// The per-dt solves run concurrently; rows are ordered as `dts`.
///
/// Throws std::domain_error unless dts is non-empty and strictly decreasing, and
/// each dt divides t_end to within 1e-9 relative.
[[nodiscard]] ConvergenceTable convergence_study(
    const FdeProblem& problem, const ReferenceSolution& reference, double t_end,
    std::span<const double> dts, SchemeKind scheme = SchemeKind::PwcIntegrablization);

}  // namespace fracdisc
