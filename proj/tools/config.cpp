#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace locstate::cli {

namespace {

double parse_double(const std::string& value, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where + ": not a number: '" + value + "'");
    }
}

int parse_int(const std::string& value, const std::string& where) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where + ": not an integer: '" + value + "'");
    }
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Mode parse_mode(const std::string& word) {
    if (word == "free") return Mode::Free;
    if (word == "oscillator") return Mode::Oscillator;
    if (word == "diffraction") return Mode::Diffraction;
    if (word == "compare") return Mode::Compare;
    if (word == "trajectories") return Mode::Trajectories;
    if (word == "mean-energy") return Mode::MeanEnergy;
    throw ConfigError("unknown mode '" + word +
                      "' (expected free|oscillator|diffraction|compare|trajectories|mean-energy)");
}

OutputFormat parse_format(const std::string& word) {
    if (word == "csv") return OutputFormat::Csv;
    if (word == "json") return OutputFormat::Json;
    if (word == "svg") return OutputFormat::Svg;
    throw ConfigError("unknown format '" + word + "' (expected csv|json|svg)");
}

std::vector<double> parse_times(const std::string& csv) {
    std::vector<double> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("times: empty entry in '" + csv + "'");
        out.push_back(parse_double(item, "times"));
    }
    if (out.empty()) throw ConfigError("times: no values in '" + csv + "'");
    return out;
}

GridSpec parse_grid(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = spec.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw ConfigError("grid: expected MIN:MAX:N, got '" + spec + "'");
    GridSpec grid;
    grid.min = parse_double(spec.substr(0, first), "grid.min");
    grid.max = parse_double(spec.substr(first + 1, second - first - 1), "grid.max");
    grid.points = parse_int(spec.substr(second + 1), "grid.points");
    return grid;
}

void apply_assignment(ExperimentConfig& config, const std::string& key, const std::string& value,
                      const std::string& where) {
    if (key == "mode") {
        config.mode = parse_mode(value);
    } else if (key == "slit.a") {
        config.slit_a = parse_double(value, where);
    } else if (key == "slit.y0") {
        config.slit_y0 = parse_double(value, where);
    } else if (key == "constants.hbar_over_m") {
        config.hbar_over_m = parse_double(value, where);
    } else if (key == "cutoffs.km") {
        config.cutoff_km = parse_double(value, where);
    } else if (key == "cutoffs.nmax") {
        config.cutoff_nmax = parse_int(value, where);
    } else if (key == "oscillator.omega") {
        config.omega = parse_double(value, where);
    } else if (key == "times") {
        config.times = parse_times(value);
    } else if (key == "screen.D") {
        config.screen_distance = parse_double(value, where);
    } else if (key == "screen.kx") {
        config.screen_kx = parse_double(value, where);
    } else if (key == "grid.min") {
        if (!config.grid) config.grid = GridSpec{};
        config.grid->min = parse_double(value, where);
    } else if (key == "grid.max") {
        if (!config.grid) config.grid = GridSpec{};
        config.grid->max = parse_double(value, where);
    } else if (key == "grid.points") {
        if (!config.grid) config.grid = GridSpec{};
        config.grid->points = parse_int(value, where);
    } else if (key == "output.format") {
        config.format = parse_format(value);
    } else if (key == "output.path") {
        config.out_path = value;
    } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

void load_config_file(ExperimentConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(line_number);
        if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        apply_assignment(config, key, value, where);
    }
}

void apply_preset(ExperimentConfig& config, const std::string& name) {
    if (name == "fig2") {
        config.mode = Mode::Free;
        config.slit_a = 0.1;
        config.slit_y0 = 0.0;
        config.hbar_over_m = 1.0;
        config.cutoff_km = 1e8;
        config.times = {0.0, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
        config.format = OutputFormat::Csv;
        if (config.out_path.empty()) config.out_path = "fig2";
    } else if (name == "fig3") {
        config.mode = Mode::Oscillator;
        config.slit_a = 2.0;
        config.slit_y0 = 10.0;
        config.hbar_over_m = 1.0;
        config.cutoff_nmax = 250;
        config.omega = 1.0;
        config.times = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
        config.format = OutputFormat::Csv;
        if (config.out_path.empty()) config.out_path = "fig3";
    } else if (name == "fig4") {
        config.mode = Mode::Compare;
        config.slit_a = 0.1;
        config.slit_y0 = 0.0;
        config.hbar_over_m = 1.0;
        config.times = {0.0005, 0.00075, 0.001, 0.01};
        config.format = OutputFormat::Json;
        if (config.out_path.empty()) config.out_path = "fig4";
    } else {
        throw ConfigError("unknown preset '" + name + "' (expected fig2|fig3|fig4)");
    }
}

void validate(const ExperimentConfig& config) {
    if (!config.mode) throw ConfigError("mode is required");
    if (!(config.slit_a > 0.0) || !std::isfinite(config.slit_a))
        throw ConfigError("slit.a must be positive and finite");
    if (!std::isfinite(config.slit_y0)) throw ConfigError("slit.y0 must be finite");
    if (!(config.hbar_over_m > 0.0) || !std::isfinite(config.hbar_over_m))
        throw ConfigError("constants.hbar_over_m must be positive and finite");
    if (config.cutoff_km && (!(*config.cutoff_km > 0.0) || !std::isfinite(*config.cutoff_km)))
        throw ConfigError("cutoffs.km must be positive and finite");
    if (config.cutoff_nmax && *config.cutoff_nmax < 0)
        throw ConfigError("cutoffs.nmax must be non-negative");
    if (!(config.omega > 0.0) || !std::isfinite(config.omega))
        throw ConfigError("oscillator.omega must be positive and finite");

    const bool has_screen = config.screen_distance.has_value() || config.screen_kx.has_value();
    if (has_screen && (!config.screen_distance || !config.screen_kx))
        throw ConfigError("screen requires both screen.D and screen.kx");
    if (has_screen && config.screen_distance &&
        (!(*config.screen_distance > 0.0) || !(*config.screen_kx > 0.0)))
        throw ConfigError("screen.D and screen.kx must be positive");

    if (config.mode == Mode::MeanEnergy) {
        // no evolution parameter; times double as the cutoff sweep
        if (has_screen) throw ConfigError("mean-energy does not use a screen");
        if (config.times.empty() && !config.cutoff_km)
            throw ConfigError("mean-energy needs times (a cutoff sweep) or cutoffs.km");
    } else {
        // exactly one of times / screen drives the evolution parameter
        if (has_screen && !config.times.empty())
            throw ConfigError("give either times or screen.D/screen.kx, not both");
        if (!has_screen && config.times.empty())
            throw ConfigError("one of times or screen.D/screen.kx is required");
    }

    if (config.grid) {
        if (config.grid->points < 2) throw ConfigError("grid.points must be >= 2");
        if (!(config.grid->min < config.grid->max))
            throw ConfigError("grid.min must be below grid.max");
        if (!std::isfinite(config.grid->min) || !std::isfinite(config.grid->max))
            throw ConfigError("grid bounds must be finite");
    }

    if (config.mode == Mode::Oscillator && config.cutoff_km)
        throw ConfigError("oscillator mode uses cutoffs.nmax, not cutoffs.km");
    if (config.mode != Mode::Oscillator && config.cutoff_nmax)
        throw ConfigError("cutoffs.nmax applies to oscillator mode only");

    for (double t : config.times) {
        if (!std::isfinite(t)) throw ConfigError("times must be finite");
        const bool needs_positive = config.mode == Mode::Compare ||
                                    config.mode == Mode::Trajectories ||
                                    config.mode == Mode::MeanEnergy;
        if (needs_positive && !(t > 0.0))
            throw ConfigError("times must be positive in this mode");
    }
}

}  // namespace locstate::cli
