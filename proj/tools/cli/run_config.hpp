#pragma once

#include <fracdisc/fde_core.hpp>
#include <fracdisc/oracle.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fracdisc::cli {

enum class ProblemKind { Linear, Riccati };
enum class GridKind { Uniform, Random, Ramp };
enum class OutputFormat { Csv, Json };

/// A configuration or flag value that failed to parse or validate.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Everything needed for one `solve` run. `c` applies to the linear builtin,
/// `rho` to the Riccati builtin; both are always carried so a config round-trips.
struct RunConfig {
    ProblemKind problem = ProblemKind::Linear;
    double alpha = 0.5;
    double c = 1.0;
    double rho = 1.0;
    double x0 = 1.0;
    SchemeKind scheme = SchemeKind::PwcIntegrablization;
    GridKind grid = GridKind::Uniform;
    double dt = 0.25;
    std::size_t n_steps = 12;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::Csv;
    std::string output = "-";  // "-" is standard output

    bool operator==(const RunConfig&) const = default;
};

/// Sets one key (problem, alpha, c, rho, x0, scheme, grid, dt, n_steps, seed,
/// format, output). Throws ConfigError on unknown keys or unparsable values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Parses `key = value` lines on top of the defaults. Blank lines and lines
/// starting with '#' are ignored; later keys override earlier ones.
[[nodiscard]] RunConfig parse_run_config(std::string_view text);

/// Inverse of parse_run_config; doubles are written with 17 significant digits.
[[nodiscard]] std::string serialize_run_config(const RunConfig& config);

/// Throws ConfigError naming the first field that violates its constraint.
void validate(const RunConfig& config);

[[nodiscard]] FdeProblem make_problem(const RunConfig& config);
[[nodiscard]] TimeGrid make_grid(const RunConfig& config);
/// The closed-form solution when one exists (linear builtin), else nullopt.
[[nodiscard]] std::optional<ReferenceSolution> exact_reference(const RunConfig& config);

[[nodiscard]] std::string_view problem_name(ProblemKind kind) noexcept;
[[nodiscard]] std::string_view grid_name(GridKind kind) noexcept;
[[nodiscard]] std::string_view format_name(OutputFormat format) noexcept;

/// Parses a double the way config files and flags do; throws ConfigError(field, ...).
[[nodiscard]] double parse_double(std::string_view field, std::string_view text);

}  // namespace fracdisc::cli
