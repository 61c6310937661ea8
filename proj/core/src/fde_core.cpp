#include "fracdisc/fde_core.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fracdisc {

FdeProblem::FdeProblem(double alpha, State x0, VectorField field)
    : alpha_(alpha), x0_(std::move(x0)), field_(std::move(field)) {
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
        std::ostringstream os;
        os << "FdeProblem: alpha = " << alpha_ << " violates 0 < alpha <= 1";
        throw std::invalid_argument(os.str());
    }
    if (x0_.empty()) {
        throw std::invalid_argument("FdeProblem: initial state must have dimension >= 1");
    }
    if (!field_) {
        throw std::invalid_argument("FdeProblem: vector field is empty");
    }
}

TimeGrid::TimeGrid(std::vector<double> times) : times_(std::move(times)) {
    if (times_.size() < 2) {
        throw std::invalid_argument("TimeGrid: need at least one step");
    }
    if (times_.front() != 0.0) {
        throw std::invalid_argument("TimeGrid: first time must be 0");
    }
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1]) || !std::isfinite(times_[i])) {
            std::ostringstream os;
            os << "TimeGrid: times must be finite and strictly increasing (index " << i << ")";
            throw std::invalid_argument(os.str());
        }
    }

    const double dt = times_[1];
    bool uniform = true;
    for (std::size_t i = 2; i < times_.size() && uniform; ++i) {
        uniform = times_[i] == static_cast<double>(i) * dt;
    }
    if (uniform) {
        uniform_step_ = dt;
    }
}

TimeGrid uniform_grid(double dt, std::size_t n_steps) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::domain_error("uniform_grid: dt must be positive and finite");
    }
    if (n_steps == 0) {
        throw std::domain_error("uniform_grid: n_steps must be at least 1");
    }
    std::vector<double> times(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i) {
        times[i] = static_cast<double>(i) * dt;
    }
    return TimeGrid(std::move(times));
}

TimeGrid random_grid(double dt_mean, std::size_t n_steps, std::uint64_t seed) {
    if (!(dt_mean > 0.0) || !std::isfinite(dt_mean)) {
        throw std::domain_error("random_grid: dt_mean must be positive and finite");
    }
    if (n_steps == 0) {
        throw std::domain_error("random_grid: n_steps must be at least 1");
    }
    std::mt19937_64 engine(seed);
    std::vector<double> times(n_steps + 1, 0.0);
    for (std::size_t i = 1; i <= n_steps; ++i) {
        // Midpoint of one of 2^52 equal cells of (0, 1); exact in double, never 0 or 1.
        const double u = (static_cast<double>(engine() >> 12) + 0.5) * 0x1p-52;
        times[i] = times[i - 1] + 2.0 * dt_mean * u;
    }
    return TimeGrid(std::move(times));
}

TimeGrid ramp_grid(double dt_mean, std::size_t n_steps) {
    if (!(dt_mean > 0.0) || !std::isfinite(dt_mean)) {
        throw std::domain_error("ramp_grid: dt_mean must be positive and finite");
    }
    if (n_steps == 0) {
        throw std::domain_error("ramp_grid: n_steps must be at least 1");
    }
    const double scale = 2.0 * dt_mean / static_cast<double>(n_steps + 1);
    std::vector<double> times(n_steps + 1, 0.0);
    for (std::size_t j = 1; j <= n_steps; ++j) {
        times[j] = times[j - 1] + scale * static_cast<double>(j);
    }
    return TimeGrid(std::move(times));
}

std::string_view scheme_name(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::PwcIntegrablization: return "pwc";
        case SchemeKind::GrunwaldLetnikov: return "gl";
        case SchemeKind::ElSayed: return "el-sayed";
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) noexcept {
    for (auto kind : {SchemeKind::PwcIntegrablization, SchemeKind::GrunwaldLetnikov,
                      SchemeKind::ElSayed}) {
        if (scheme_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

Trajectory::Trajectory(TimeGrid grid, std::vector<State> states, SchemeKind scheme)
    : grid_(std::move(grid)), states_(std::move(states)), scheme_(scheme) {
    if (states_.size() != grid_.size()) {
        throw std::invalid_argument("Trajectory: one state per grid time is required");
    }
}

}  // namespace fracdisc
