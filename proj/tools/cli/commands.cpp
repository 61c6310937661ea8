#include "commands.hpp"

#include <fracdisc/analysis.hpp>
#include <fracdisc/errors.hpp>
#include <fracdisc/problems.hpp>
#include <fracdisc/schemes.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace fracdisc::cli {

namespace fs = std::filesystem;

namespace {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        body();
        return kExitSuccess;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const SchemeFailure& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    } catch (const NonConvergence& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    }
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

void write_file(const Table& table, OutputFormat format, const fs::path& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_table(table, format, file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void emit(const Table& table, const RunConfig& config, std::ostream& out) {
    if (config.output == "-") {
        write_table(table, config.format, out);
    } else {
        write_file(table, config.format, config.output);
    }
}

Table trajectory_table(const Trajectory& run) {
    Table table{{"index", "time", "x"}, {}};
    for (std::size_t n = 0; n < run.size(); ++n) {
        table.rows.push_back({static_cast<std::int64_t>(n), run.grid()[n], run.state(n)[0]});
    }
    return table;
}

Table residual_table(const ResidualReport& report) {
    Table table{{"index", "time", "residual"}, {}};
    for (std::size_t n = 0; n < report.grid_times.size(); ++n) {
        table.rows.push_back(
            {static_cast<std::int64_t>(n), report.grid_times[n], report.residuals[n][0]});
    }
    return table;
}

std::size_t steps_for(double t_end, double dt) {
    const double n = std::round(t_end / dt);
    if (n < 1.0) {
        throw ConfigError("t_end", "shorter than one step");
    }
    return static_cast<std::size_t>(n);
}

std::vector<fs::path> write_fig1(const fs::path& dir, const FigureOptions& options) {
    const FdeProblem problem = riccati_problem(0.8, 1.0, 0.5);
    std::vector<std::pair<double, std::string>> steps{{0.1, "0.1"}, {0.01, "0.01"}};
    if (options.include_finest_step) {
        steps.emplace_back(0.001, "0.001");
    }
    std::vector<fs::path> written;
    for (SchemeKind scheme : {SchemeKind::ElSayed, SchemeKind::PwcIntegrablization}) {
        const std::string tag = scheme == SchemeKind::ElSayed ? "el_sayed" : "pwc";
        for (const auto& [dt, label] : steps) {
            const Trajectory run =
                solve(scheme, problem, uniform_grid(dt, steps_for(options.fig1_t_end, dt)));
            const fs::path path = dir / ("fig1_" + tag + "_dt" + label + ".csv");
            write_file(trajectory_table(run), OutputFormat::Csv, path);
            written.push_back(path);
        }
    }
    return written;
}

std::vector<fs::path> write_fig2(const fs::path& dir) {
    constexpr double kAlpha = 0.5;
    constexpr double kDecay = 1.0;
    constexpr double kX0 = 1.0;
    constexpr double kDt = 0.25;
    constexpr std::size_t kSteps = 12;
    constexpr std::size_t kExactSamples = 301;
    constexpr double kTEnd = 3.0;

    const FdeProblem problem = linear_problem(kAlpha, kDecay, kX0);
    const ReferenceSolution exact = exact_linear(kAlpha, kDecay, kX0);

    const std::vector<std::pair<std::string, Trajectory>> series{
        {"gl", solve_gl(problem, uniform_grid(kDt, kSteps))},
        {"pwc_uniform", solve_pwc(problem, uniform_grid(kDt, kSteps))},
        {"pwc_random", solve_pwc(problem, random_grid(kDt, kSteps, kFig2RandomSeed))},
        {"pwc_ramp", solve_pwc(problem, ramp_grid(kDt, kSteps))},
    };

    std::vector<fs::path> written;
    for (const auto& [name, run] : series) {
        const fs::path path = dir / ("fig2_" + name + ".csv");
        write_file(trajectory_table(run), OutputFormat::Csv, path);
        written.push_back(path);
    }
    for (const auto& [name, run] : series) {
        const fs::path path = dir / ("fig2_residuals_" + name + ".csv");
        write_file(residual_table(residuals(run, exact)), OutputFormat::Csv, path);
        written.push_back(path);
    }

    Table curve{{"time", "x"}, {}};
    for (std::size_t i = 0; i < kExactSamples; ++i) {
        const double t = kTEnd * static_cast<double>(i) / static_cast<double>(kExactSamples - 1);
        curve.rows.push_back({t, exact(t)[0]});
    }
    const fs::path path = dir / "fig2_exact.csv";
    write_file(curve, OutputFormat::Csv, path);
    written.push_back(path);
    return written;
}

// Options shared by `solve` and `convergence`; each maps onto a RunConfig key.
struct RunFlags {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::string t_end;
    CLI::Option* t_end_option = nullptr;

    void attach(CLI::App* app, bool grid_flags) {
        app->add_option("--config", config_path, "key = value configuration file");
        const std::vector<std::pair<std::string, std::string>> flags{
            {"problem", "builtin problem: linear | riccati"},
            {"alpha", "fractional order, 0 < alpha <= 1"},
            {"c", "decay coefficient of the linear builtin"},
            {"rho", "coefficient of the Riccati builtin"},
            {"x0", "initial state"},
            {"scheme", "pwc | gl | el-sayed"},
            {"format", "csv | json"},
            {"output", "output path, '-' for standard output"},
        };
        for (const auto& [key, help] : flags) {
            options[key] = app->add_option("--" + key, values[key], help);
        }
        if (grid_flags) {
            options["grid"] = app->add_option("--grid", values["grid"], "uniform | random | ramp");
            options["dt"] = app->add_option("--dt", values["dt"], "time step (mean step for random and ramp)");
            options["n_steps"] = app->add_option("--n-steps", values["n_steps"], "number of steps");
            options["seed"] = app->add_option("--seed", values["seed"], "random grid seed");
        }
        t_end_option = app->add_option("--t-end", t_end,
                                       grid_flags ? "final time; overrides --n-steps as round(t_end / dt)"
                                                  : "end of the interval, where errors are measured (default 3)");
    }

    RunConfig resolve() const {
        RunConfig config;
        if (!config_path.empty()) {
            std::ifstream file(config_path, std::ios::binary);
            if (!file) {
                throw IoError("cannot read config '" + config_path + "'");
            }
            std::ostringstream text;
            text << file.rdbuf();
            config = parse_run_config(text.str());
        }
        for (const auto& [key, option] : options) {
            if (option->count() > 0) {
                apply_setting(config, key, values.at(key));
            }
        }
        return config;
    }
};

std::vector<double> parse_dts(const std::string& text) {
    std::vector<double> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        out.push_back(parse_double("dts", rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (out.empty()) {
        throw ConfigError("dts", "need at least one step size");
    }
    return out;
}

}  // namespace

Table solve_table(const RunConfig& config) {
    validate(config);
    const FdeProblem problem = make_problem(config);
    const Trajectory run = solve(config.scheme, problem, make_grid(config));
    const auto exact = exact_reference(config);

    Table table{{"index", "time", "x"}, {}};
    if (exact) {
        table.columns.emplace_back("residual");
    }
    for (std::size_t n = 0; n < run.size(); ++n) {
        const double t = run.grid()[n];
        const double x = run.state(n)[0];
        std::vector<Cell> row{static_cast<std::int64_t>(n), t, x};
        if (exact) {
            row.emplace_back(x - (*exact)(t)[0]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] { emit(solve_table(config), config, out); });
}

std::vector<fs::path> write_figure(FigureKind which, const fs::path& out_dir,
                                   const FigureOptions& options) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        throw IoError("cannot create output directory '" + out_dir.string() + "'");
    }
    return which == FigureKind::Fig1 ? write_fig1(out_dir, options) : write_fig2(out_dir);
}

int cmd_figure(FigureKind which, const fs::path& out_dir, const FigureOptions& options,
               std::ostream& err) {
    return guarded(err, [&] {
        if (!(options.fig1_t_end > 0.0)) {
            throw ConfigError("t_end", "must be positive");
        }
        (void)write_figure(which, out_dir, options);
    });
}

Table convergence_table(const ConvergenceConfig& config) {
    validate(config.run);
    const FdeProblem problem = make_problem(config.run);
    const auto exact = exact_reference(config.run);
    const ReferenceSolution reference =
        exact ? *exact : fine_grid_reference(problem, config.t_end);

    const ConvergenceTable study =
        convergence_study(problem, reference, config.t_end, config.dts, config.run.scheme);

    Table table{{"dt", "max_abs_error", "observed_ratio"}, {}};
    for (const auto& row : study.rows) {
        table.rows.push_back({row.dt, row.max_abs_error,
                              row.observed_ratio ? Cell{*row.observed_ratio} : Cell{}});
    }
    return table;
}

int cmd_convergence(const ConvergenceConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] { emit(convergence_table(config), config.run, out); });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Piecewise-constant integrablization and comparator schemes for Caputo IVPs", "fracdisc"};
    app.require_subcommand(1);

    RunFlags solve_flags;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run one scheme and emit the trajectory");
    solve_flags.attach(solve_cmd, true);

    std::string figure_name;
    std::string out_dir = ".";
    std::string figure_t_end;
    bool finest = false;
    CLI::App* figure_cmd = app.add_subcommand("figure", "write the data series behind a figure");
    figure_cmd->add_option("which", figure_name, "fig1 | fig2")->required();
    figure_cmd->add_option("--out-dir", out_dir, "output directory");
    CLI::Option* figure_t_end_option =
        figure_cmd->add_option("--t-end", figure_t_end, "fig1 final time (default 5)");
    figure_cmd->add_flag("--include-dt-0.001", finest, "add the dt = 0.001 series to fig1");

    RunFlags conv_flags;
    std::string dts_text;
    CLI::App* conv_cmd = app.add_subcommand("convergence", "error at t_end over a list of steps");
    conv_flags.attach(conv_cmd, false);
    CLI::Option* dts_option =
        conv_cmd->add_option("--dts", dts_text, "comma-separated, strictly decreasing steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitConfigError;
    }

    if (solve_cmd->parsed()) {
        RunConfig config;
        const int status = guarded(err, [&] {
            config = solve_flags.resolve();
            if (solve_flags.t_end_option->count() > 0) {
                config.n_steps = steps_for(parse_double("t_end", solve_flags.t_end), config.dt);
            }
        });
        return status != kExitSuccess ? status : cmd_solve(config, out, err);
    }

    if (figure_cmd->parsed()) {
        FigureOptions options;
        options.include_finest_step = finest;
        FigureKind which = FigureKind::Fig1;
        const int status = guarded(err, [&] {
            if (figure_name == "fig1") {
                which = FigureKind::Fig1;
            } else if (figure_name == "fig2") {
                which = FigureKind::Fig2;
            } else {
                throw ConfigError("which", "expected fig1 or fig2, got '" + figure_name + "'");
            }
            if (figure_t_end_option->count() > 0) {
                options.fig1_t_end = parse_double("t_end", figure_t_end);
            }
        });
        return status != kExitSuccess ? status : cmd_figure(which, out_dir, options, err);
    }

    ConvergenceConfig config;
    const int status = guarded(err, [&] {
        config.run = conv_flags.resolve();
        if (conv_flags.t_end_option->count() > 0) {
            config.t_end = parse_double("t_end", conv_flags.t_end);
        }
        if (dts_option->count() > 0) {
            config.dts = parse_dts(dts_text);
        }
    });
    return status != kExitSuccess ? status : cmd_convergence(config, out, err);
}

}  // namespace fracdisc::cli
