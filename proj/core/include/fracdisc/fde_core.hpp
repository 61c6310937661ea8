#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fracdisc {

/// Fixed-dimension real state; scalar problems use dimension 1.
using State = std::vector<double>;

/// Right-hand side f(t, x) of a Caputo initial value problem. Must be deterministic.
using VectorField = std::function<State(double t, const State& x)>;

/// Caputo initial value problem  D^alpha x(t) = f(t, x(t)),  x(0) = x0,  0 < alpha <= 1.
class FdeProblem {
public:
    /// Throws std::invalid_argument on alpha outside (0, 1], empty x0 or a null field.
    FdeProblem(double alpha, State x0, VectorField field);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] const State& x0() const noexcept { return x0_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return x0_.size(); }

    [[nodiscard]] State field(double t, const State& x) const { return field_(t, x); }

private:
    double alpha_;
    State x0_;
    VectorField field_;
};

/// Strictly increasing partition 0 = tau_0 < tau_1 < ... < tau_N, N >= 1.
///
/// A grid whose times are bitwise i * tau_1 is flagged uniform, however it was
/// constructed; schemes use that flag to pick the precomputed-weight path.
class TimeGrid {
public:
    /// Throws std::invalid_argument unless the invariants hold.
    explicit TimeGrid(std::vector<double> times);

    [[nodiscard]] std::span<const double> times() const noexcept { return times_; }
    [[nodiscard]] double operator[](std::size_t i) const { return times_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return times_.size(); }
    /// Number of steps N (= size() - 1).
    [[nodiscard]] std::size_t steps() const noexcept { return times_.size() - 1; }
    [[nodiscard]] double final_time() const noexcept { return times_.back(); }
    /// tau_i - tau_{i-1}, for 1 <= i <= N.
    [[nodiscard]] double increment(std::size_t i) const { return times_[i] - times_[i - 1]; }
    [[nodiscard]] std::optional<double> uniform_step() const noexcept { return uniform_step_; }

    friend bool operator==(const TimeGrid& a, const TimeGrid& b) { return a.times_ == b.times_; }

private:
    std::vector<double> times_;
    std::optional<double> uniform_step_;
};

/// times[i] = i * dt. Throws std::domain_error for dt <= 0 or n_steps == 0.
[[nodiscard]] TimeGrid uniform_grid(double dt, std::size_t n_steps);

/// Increments drawn i.i.d. uniform on the open interval (0, 2 dt_mean) from a
/// std::mt19937_64 seeded with `seed`. The mapping from generator output to the
/// increment is fixed (52-bit cell midpoints), so grids are identical across
/// platforms for equal seeds.
[[nodiscard]] TimeGrid random_grid(double dt_mean, std::size_t n_steps, std::uint64_t seed);

/// Linearly increasing increments 2 dt_mean j / (n_steps + 1), j = 1..n_steps,
/// whose mean is dt_mean.
[[nodiscard]] TimeGrid ramp_grid(double dt_mean, std::size_t n_steps);

enum class SchemeKind { PwcIntegrablization, GrunwaldLetnikov, ElSayed };

/// Short names used on the command line and in file names: "pwc", "gl", "el-sayed".
[[nodiscard]] std::string_view scheme_name(SchemeKind kind) noexcept;
[[nodiscard]] std::optional<SchemeKind> parse_scheme(std::string_view name) noexcept;

/// Grid-point states of one scheme run; states[0] is the problem's x0.
class Trajectory {
public:
    /// Throws std::invalid_argument when states and grid lengths differ.
    Trajectory(TimeGrid grid, std::vector<State> states, SchemeKind scheme);

    [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<State>& states() const noexcept { return states_; }
    [[nodiscard]] const State& state(std::size_t i) const { return states_[i]; }
    [[nodiscard]] SchemeKind scheme() const noexcept { return scheme_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }

private:
    TimeGrid grid_;
    std::vector<State> states_;
    SchemeKind scheme_;
};

}  // namespace fracdisc
