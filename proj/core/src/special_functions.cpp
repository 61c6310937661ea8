#include "fracdisc/special_functions.hpp"

#include "fracdisc/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#if defined(FRACDISC_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace fracdisc {

namespace {

#if defined(FRACDISC_HAVE_QUADMATH)
using SeriesReal = __float128;
SeriesReal series_abs(SeriesReal v) { return fabsq(v); }
SeriesReal series_tgamma(SeriesReal v) { return tgammaq(v); }
bool series_finite(SeriesReal v) { return finiteq(v) != 0; }
constexpr double kSeriesEpsilon = 1.9259299443872359e-34;  // 2^-112
#else
using SeriesReal = long double;
SeriesReal series_abs(SeriesReal v) { return std::fabs(v); }
SeriesReal series_tgamma(SeriesReal v) { return std::tgamma(v); }
bool series_finite(SeriesReal v) { return std::isfinite(v); }
constexpr double kSeriesEpsilon = std::numeric_limits<long double>::epsilon();
#endif

// Relative accuracy the series must retain after cancellation.
constexpr double kCancellationBudget = 1e-11;

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    SeriesReal sum = 0;
    SeriesReal carry = 0;

    void add(SeriesReal term) {
        const SeriesReal t = sum + term;
        if (series_abs(sum) >= series_abs(term)) {
            carry += (sum - t) + term;
        } else {
            carry += (term - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] SeriesReal value() const { return sum + carry; }
};

}  // namespace

void MLEvalConfig::validate() const {
    if (!(series_tolerance > 0.0 && series_tolerance < 1e-6)) {
        throw std::invalid_argument("MLEvalConfig: series_tolerance must lie in (0, 1e-6)");
    }
    if (max_terms < 100) {
        throw std::invalid_argument("MLEvalConfig: max_terms must be at least 100");
    }
}

double gamma(double z) {
    if (!(z > 0.0)) {
        std::ostringstream os;
        os << "gamma: argument " << z << " must be positive";
        throw std::domain_error(os.str());
    }
    return std::tgamma(z);
}

double mittag_leffler(double alpha, double y, const MLEvalConfig& config) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw std::domain_error("mittag_leffler: alpha must satisfy 0 < alpha <= 1");
    }
    if (!(std::fabs(y) <= kMittagLefflerArgumentCutoff)) {
        std::ostringstream os;
        os << "mittag_leffler: |y| = " << std::fabs(y) << " exceeds the supported cutoff "
           << kMittagLefflerArgumentCutoff;
        throw std::domain_error(os.str());
    }
    config.validate();

    if (y == 0.0) {
        return 1.0;
    }

    const SeriesReal a = alpha;
    const SeriesReal z = y;
    CompensatedSum sum;
    SeriesReal abs_sum = 0;
    SeriesReal power = 1;
    SeriesReal previous = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < config.max_terms; ++k) {
        const SeriesReal term = power / series_tgamma(1 + a * static_cast<SeriesReal>(k));
        if (!series_finite(term)) {
            break;
        }
        sum.add(term);
        abs_sum += series_abs(term);

        const SeriesReal magnitude = series_abs(term);
        const SeriesReal total = series_abs(sum.value());
        // Past the peak, |term| is monotonically decreasing (log-convexity of Gamma).
        if (magnitude < previous && magnitude <= config.series_tolerance * total) {
            const double condition = static_cast<double>(abs_sum / total);
            if (condition * 8.0 * kSeriesEpsilon > kCancellationBudget) {
                std::ostringstream os;
                os << "mittag_leffler(" << alpha << ", " << y << "): cancellation (condition "
                   << condition << ") exceeds the working precision";
                throw NonConvergence(os.str());
            }
            return static_cast<double>(sum.value());
        }
        previous = magnitude;
        power *= z;
    }

    std::ostringstream os;
    os << "mittag_leffler(" << alpha << ", " << y << "): series did not converge within "
       << config.max_terms << " terms";
    throw NonConvergence(os.str());
}

}  // namespace fracdisc
