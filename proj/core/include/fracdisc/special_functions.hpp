#pragma once

#include <cstddef>

namespace fracdisc {

/// Stopping rule for the Mittag-Leffler power series.
struct MLEvalConfig {
    double series_tolerance = 1e-14;
    std::size_t max_terms = 500;

    /// Throws std::invalid_argument unless 0 < series_tolerance < 1e-6 and max_terms >= 100.
    void validate() const;
};

/// Largest |y| accepted by mittag_leffler().
inline constexpr double kMittagLefflerArgumentCutoff = 10.0;

/// Gamma function on the positive real axis. Throws std::domain_error for z <= 0.
[[nodiscard]] double gamma(double z);

/// One-parameter Mittag-Leffler function E_alpha(y) = sum_k y^k / Gamma(1 + alpha k).
///
/// Evaluated by direct power series in extended precision (quad precision where
/// the toolchain has it) with compensated summation. The series is accepted only
/// once the terms are decreasing and below series_tolerance relative to the sum,
/// and only if the cancellation between terms leaves at least ~1e-11 relative
/// accuracy; otherwise NonConvergence is thrown. For 0.5 <= alpha <= 1 this
/// covers all of |y| <= 5; smaller alpha restricts the usable negative range.
///
/// Throws std::domain_error unless 0 < alpha <= 1 and |y| <= kMittagLefflerArgumentCutoff.
[[nodiscard]] double mittag_leffler(double alpha, double y, const MLEvalConfig& config = {});

}  // namespace fracdisc
