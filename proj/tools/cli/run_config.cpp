#include "run_config.hpp"

#include "table.hpp"

#include <fracdisc/problems.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace fracdisc::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class Int>
Int parse_integer(std::string_view field, std::string_view text) {
    Int value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(field), "expected a non-negative integer, got '" +
                                                  std::string(text) + "'");
    }
    return value;
}

}  // namespace

double parse_double(std::string_view field, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ConfigError(std::string(field), "expected a finite number, got '" +
                                                  std::string(text) + "'");
    }
    return value;
}

std::string_view problem_name(ProblemKind kind) noexcept {
    return kind == ProblemKind::Linear ? "linear" : "riccati";
}

std::string_view grid_name(GridKind kind) noexcept {
    switch (kind) {
        case GridKind::Uniform: return "uniform";
        case GridKind::Random: return "random";
        case GridKind::Ramp: return "ramp";
    }
    return "unknown";
}

std::string_view format_name(OutputFormat format) noexcept {
    return format == OutputFormat::Csv ? "csv" : "json";
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    if (key == "problem") {
        if (value == "linear") {
            config.problem = ProblemKind::Linear;
        } else if (value == "riccati") {
            config.problem = ProblemKind::Riccati;
        } else {
            throw ConfigError("problem", "expected linear or riccati, got '" + std::string(value) + "'");
        }
    } else if (key == "alpha") {
        config.alpha = parse_double(key, value);
    } else if (key == "c") {
        config.c = parse_double(key, value);
    } else if (key == "rho") {
        config.rho = parse_double(key, value);
    } else if (key == "x0") {
        config.x0 = parse_double(key, value);
    } else if (key == "scheme") {
        const auto kind = parse_scheme(value);
        if (!kind) {
            throw ConfigError("scheme", "expected pwc, gl or el-sayed, got '" + std::string(value) + "'");
        }
        config.scheme = *kind;
    } else if (key == "grid") {
        if (value == "uniform") {
            config.grid = GridKind::Uniform;
        } else if (value == "random") {
            config.grid = GridKind::Random;
        } else if (value == "ramp") {
            config.grid = GridKind::Ramp;
        } else {
            throw ConfigError("grid", "expected uniform, random or ramp, got '" + std::string(value) + "'");
        }
    } else if (key == "dt") {
        config.dt = parse_double(key, value);
    } else if (key == "n_steps") {
        config.n_steps = parse_integer<std::size_t>(key, value);
    } else if (key == "seed") {
        if (value.empty()) {
            config.seed.reset();
        } else {
            config.seed = parse_integer<std::uint64_t>(key, value);
        }
    } else if (key == "format") {
        if (value == "csv") {
            config.format = OutputFormat::Csv;
        } else if (value == "json") {
            config.format = OutputFormat::Json;
        } else {
            throw ConfigError("format", "expected csv or json, got '" + std::string(value) + "'");
        }
    } else if (key == "output") {
        config.output = std::string(value);
    } else {
        throw ConfigError(std::string(key), "unknown configuration key");
    }
}

RunConfig parse_run_config(std::string_view text) {
    RunConfig config;
    std::size_t line_number = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_number;

        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_number), "expected key = value");
        }
        apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

std::string serialize_run_config(const RunConfig& config) {
    std::ostringstream os;
    os << "problem = " << problem_name(config.problem) << '\n'
       << "alpha = " << format_double(config.alpha) << '\n'
       << "c = " << format_double(config.c) << '\n'
       << "rho = " << format_double(config.rho) << '\n'
       << "x0 = " << format_double(config.x0) << '\n'
       << "scheme = " << scheme_name(config.scheme) << '\n'
       << "grid = " << grid_name(config.grid) << '\n'
       << "dt = " << format_double(config.dt) << '\n'
       << "n_steps = " << config.n_steps << '\n'
       << "seed = " << (config.seed ? std::to_string(*config.seed) : std::string{}) << '\n'
       << "format = " << format_name(config.format) << '\n'
       << "output = " << config.output << '\n';
    return os.str();
}

void validate(const RunConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha <= 1.0)) {
        throw ConfigError("alpha", "must satisfy 0 < alpha <= 1 (got " + format_double(config.alpha) + ")");
    }
    if (config.problem == ProblemKind::Linear && !(config.c > 0.0)) {
        throw ConfigError("c", "must be positive");
    }
    if (!(config.dt > 0.0)) {
        throw ConfigError("dt", "must be positive");
    }
    if (config.n_steps == 0) {
        throw ConfigError("n_steps", "must be at least 1");
    }
    if (config.grid == GridKind::Random && !config.seed) {
        throw ConfigError("seed", "a random grid requires an explicit seed");
    }
    if (config.scheme != SchemeKind::PwcIntegrablization && config.grid != GridKind::Uniform) {
        throw ConfigError("grid", std::string(scheme_name(config.scheme)) + " requires a uniform grid");
    }
    if (config.output.empty()) {
        throw ConfigError("output", "must be a path or '-'");
    }
}

FdeProblem make_problem(const RunConfig& config) {
    if (config.problem == ProblemKind::Linear) {
        return linear_problem(config.alpha, config.c, config.x0);
    }
    return riccati_problem(config.alpha, config.rho, config.x0);
}

TimeGrid make_grid(const RunConfig& config) {
    switch (config.grid) {
        case GridKind::Uniform: return uniform_grid(config.dt, config.n_steps);
        case GridKind::Random: return random_grid(config.dt, config.n_steps, config.seed.value());
        case GridKind::Ramp: return ramp_grid(config.dt, config.n_steps);
    }
    throw ConfigError("grid", "unknown grid kind");
}

std::optional<ReferenceSolution> exact_reference(const RunConfig& config) {
    if (config.problem != ProblemKind::Linear) {
        return std::nullopt;
    }
    return exact_linear(config.alpha, config.c, config.x0);
}

}  // namespace fracdisc::cli
