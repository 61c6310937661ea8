#pragma once

#include "run_config.hpp"
#include "table.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace fracdisc::cli {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitConfigError = 1,
    kExitSolverFailure = 2,
    kExitIoError = 3,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One row per grid point: index, time, x, and residual when an exact solution exists.
[[nodiscard]] Table solve_table(const RunConfig& config);

/// Validates, solves and writes the table to config.output ("-" means `out`).
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

enum class FigureKind { Fig1, Fig2 };

/// Seed of the random grid in the fig2 data set.
inline constexpr std::uint64_t kFig2RandomSeed = 2017;

struct FigureOptions {
    /// fig1 integrates the Riccati builtin on [0, fig1_t_end].
    double fig1_t_end = 5.0;
    /// Adds the dt = 0.001 series to fig1.
    bool include_finest_step = false;
};

/// Writes the CSV series for one figure into out_dir (created if missing) and
/// returns the written paths in a fixed order. Throws IoError with the path on failure.
std::vector<std::filesystem::path> write_figure(FigureKind which, const std::filesystem::path& out_dir,
                                                const FigureOptions& options = {});

int cmd_figure(FigureKind which, const std::filesystem::path& out_dir, const FigureOptions& options,
               std::ostream& err);

struct ConvergenceConfig {
    /// Problem, scheme, format and output are taken from here; the grid fields are ignored.
    RunConfig run;
    double t_end = 3.0;
    std::vector<double> dts{0.25, 0.125, 0.0625, 0.03125};
};

/// Columns dt, max_abs_error, observed_ratio (empty on the first row). The linear
/// builtin is compared with its exact solution, the Riccati builtin with a
/// fine-grid reference.
[[nodiscard]] Table convergence_table(const ConvergenceConfig& config);

int cmd_convergence(const ConvergenceConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: `solve`, `figure`, `convergence`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracdisc::cli
