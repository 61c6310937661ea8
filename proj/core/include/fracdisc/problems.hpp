#pragma once

#include "fracdisc/fde_core.hpp"

namespace fracdisc {

/// Scalar linear relaxation  D^alpha x = -c x,  x(0) = x0.
[[nodiscard]] FdeProblem linear_problem(double alpha, double c, double x0);

/// Scalar fractional Riccati equation  D^alpha x = 1 - rho x^2,  x(0) = x0.
[[nodiscard]] FdeProblem riccati_problem(double alpha, double rho, double x0);

}  // namespace fracdisc
