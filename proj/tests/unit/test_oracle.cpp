#include <fracdisc/oracle.hpp>
#include <fracdisc/problems.hpp>
#include <fracdisc/schemes.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "test_support.hpp"

namespace fracdisc {
namespace {

using testing::relative_difference;

double max_deviation_on_0_3(const ReferenceSolution& a, const ReferenceSolution& b) {
    double worst = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double t = 3.0 * i / 300.0;
        worst = std::max(worst, std::fabs(a(t)[0] - b(t)[0]));
    }
    return worst;
}

TEST(ExactLinear, InitialValue) {
    EXPECT_EQ(exact_linear(0.5, 1.0, 2.5)(0.0), State{2.5});
    EXPECT_EQ(exact_linear(0.5, 1.0, 2.5).kind(), ReferenceKind::ExactLinear);
}

TEST(ExactLinear, OrderOneIsExponentialDecay) {
    const ReferenceSolution ref = exact_linear(1.0, 0.7, 1.3);
    for (int i = 0; i <= 40; ++i) {
        const double t = 0.1 * i;
        EXPECT_LE(relative_difference(ref(t)[0], 1.3 * std::exp(-0.7 * t)), 1e-10) << t;
    }
}

TEST(ExactLinear, HalfOrderMatchesErfcForm) {
    const ReferenceSolution ref = exact_linear(0.5, 1.0, 1.0);
    for (int i = 0; i <= 60; ++i) {
        const double t = 3.0 * i / 60.0;
        EXPECT_NEAR(ref(t)[0], std::exp(t) * std::erfc(std::sqrt(t)), 1e-10) << t;
    }
}

TEST(ExactLinear, RejectsBadParameters) {
    EXPECT_THROW((void)exact_linear(0.0, 1.0, 1.0), std::domain_error);
    EXPECT_THROW((void)exact_linear(0.5, 0.0, 1.0), std::domain_error);
    EXPECT_THROW((void)exact_linear(0.5, 1.0, 1.0, MLEvalConfig{1.0, 500}), std::invalid_argument);
}

TEST(QuadratureReference, ZeroFieldAndSingleStep) {
    const FdeProblem zero(0.5, State{2.0}, [](double, const State&) { return State{0.0}; });
    const ReferenceSolution flat = quadrature_reference(zero, uniform_grid(0.3, 10));
    for (double t : {0.0, 0.45, 1.2, 3.0}) {
        EXPECT_EQ(flat(t), State{2.0});
    }

    const FdeProblem lin = linear_problem(0.5, 1.0, 1.0);
    const ReferenceSolution one = quadrature_reference(lin, uniform_grid(0.4, 1));
    EXPECT_LE(relative_difference(one(0.4)[0], 1.0 - std::pow(0.4, 0.5) / std::tgamma(1.5)), 1e-15);
    EXPECT_EQ(one(0.0), State{1.0});
    EXPECT_EQ(one.kind(), ReferenceKind::Quadrature);
    EXPECT_THROW((void)one(-0.1), std::domain_error);
}

TEST(QuadratureReference, EquivalentToSchemeOnRandomizedProblems) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> order(0.1, 1.0);
    std::uniform_real_distribution<double> start(0.2, 1.8);
    std::uniform_int_distribution<std::size_t> steps(1, 64);
    for (int trial = 0; trial < 40; ++trial) {
        const double alpha = order(rng);
        const FdeProblem problem = (trial % 2 == 0) ? linear_problem(alpha, 1.0, start(rng))
                                                    : riccati_problem(alpha, 1.0, start(rng));
        const std::size_t n = steps(rng);
        const TimeGrid grid = (trial % 3 == 0) ? random_grid(3.0 / n, n, rng()) : uniform_grid(3.0 / n, n);
        const Trajectory run = solve_pwc(problem, grid);
        const ReferenceSolution quad = quadrature_reference(problem, grid);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            ASSERT_LE(relative_difference(run.state(k)[0], quad(grid[k])[0]), 1e-12)
                << "trial " << trial << " point " << k;
        }
    }
}

TEST(FineGridReference, ZeroField) {
    const FdeProblem zero(0.7, State{-0.4}, [](double, const State&) { return State{0.0}; });
    const ReferenceSolution ref = fine_grid_reference(zero, 2.0, kMinFineGridSteps);
    EXPECT_EQ(ref(0.0), State{-0.4});
    EXPECT_EQ(ref(1.234), State{-0.4});
    EXPECT_EQ(ref.kind(), ReferenceKind::FineGrid);
}

TEST(FineGridReference, BeatsCoarseGridOnLinearProblem) {
    const FdeProblem problem = linear_problem(0.5, 1.0, 1.0);
    const ReferenceSolution exact = exact_linear(0.5, 1.0, 1.0);
    const ReferenceSolution fine = fine_grid_reference(problem, 3.0);
    const double coarse = solve_pwc(problem, uniform_grid(0.25, 12)).states().back()[0];
    EXPECT_LT(std::fabs(fine(3.0)[0] - exact(3.0)[0]), std::fabs(coarse - exact(3.0)[0]));
}

TEST(FineGridReference, ConvergesToExactUnderRefinement) {
    const FdeProblem problem = linear_problem(0.5, 1.0, 1.0);
    const ReferenceSolution exact = exact_linear(0.5, 1.0, 1.0);
    double previous = INFINITY;
    for (std::size_t steps = kMinFineGridSteps; steps <= 8 * kMinFineGridSteps; steps *= 2) {
        const double deviation = max_deviation_on_0_3(fine_grid_reference(problem, 3.0, steps), exact);
        EXPECT_LT(deviation, previous) << steps;
        previous = deviation;
    }
}

TEST(FineGridReference, RejectsBadArguments) {
    const FdeProblem problem = linear_problem(0.5, 1.0, 1.0);
    EXPECT_THROW((void)fine_grid_reference(problem, 1.0, kMinFineGridSteps - 1), std::domain_error);
    EXPECT_THROW((void)fine_grid_reference(problem, 0.0), std::domain_error);
    const ReferenceSolution ref = fine_grid_reference(problem, 1.0, kMinFineGridSteps);
    EXPECT_THROW((void)ref(1.5), std::domain_error);
    EXPECT_THROW((void)ref(-0.5), std::domain_error);
    EXPECT_NO_THROW((void)ref(1.0));
}

TEST(TrajectoryInterpolant, ReproducesGridPointsAndInterpolates) {
    const Trajectory run(TimeGrid({0.0, 1.0, 3.0}), {State{1.0}, State{3.0}, State{-1.0}},
                         SchemeKind::PwcIntegrablization);
    const ReferenceSolution ref = trajectory_interpolant(run);
    EXPECT_EQ(ref(0.0), State{1.0});
    EXPECT_EQ(ref(1.0), State{3.0});
    EXPECT_EQ(ref(3.0), State{-1.0});
    EXPECT_DOUBLE_EQ(ref(0.5)[0], 2.0);
    EXPECT_DOUBLE_EQ(ref(2.0)[0], 1.0);
}

}  // namespace
}  // namespace fracdisc
