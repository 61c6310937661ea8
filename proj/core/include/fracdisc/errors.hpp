#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdisc {

/// A series evaluation ran out of terms, or lost too many digits to
/// cancellation, before meeting its tolerance.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scheme produced a non-finite value (or a field returned a malformed state).
class SchemeFailure : public std::runtime_error {
public:
    SchemeFailure(std::size_t step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// A scheme that needs a constant step was handed a non-uniform grid.
class NonUniformGrid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fracdisc
