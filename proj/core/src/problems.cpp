#include "fracdisc/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdisc {

FdeProblem linear_problem(double alpha, double c, double x0) {
    if (!std::isfinite(c) || !std::isfinite(x0)) {
        throw std::invalid_argument("linear_problem: c and x0 must be finite");
    }
    return FdeProblem(alpha, State{x0}, [c](double, const State& x) { return State{-c * x[0]}; });
}

FdeProblem riccati_problem(double alpha, double rho, double x0) {
    if (!std::isfinite(rho) || !std::isfinite(x0)) {
        throw std::invalid_argument("riccati_problem: rho and x0 must be finite");
    }
    return FdeProblem(alpha, State{x0},
                      [rho](double, const State& x) { return State{1.0 - rho * x[0] * x[0]}; });
}

}  // namespace fracdisc
