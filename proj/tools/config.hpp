#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace locstate::cli {

/// Raised for anything the user got wrong (flags, config file, invariants);
/// mapped to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Free, Oscillator, Diffraction, Compare, Trajectories, MeanEnergy };
enum class OutputFormat { Csv, Json, Svg };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

struct ExperimentConfig {
    std::optional<Mode> mode;

    double slit_a = 0.1;
    double slit_y0 = 0.0;
    double hbar_over_m = 1.0;

    std::optional<double> cutoff_km;
    std::optional<int> cutoff_nmax;
    double omega = 1.0;

    std::vector<double> times;
    std::optional<double> screen_distance;
    std::optional<double> screen_kx;

    std::optional<GridSpec> grid;

    OutputFormat format = OutputFormat::Csv;
    std::string out_path;  // basename; per-time suffix appended
};

Mode parse_mode(const std::string& word);
OutputFormat parse_format(const std::string& word);
std::vector<double> parse_times(const std::string& csv);
GridSpec parse_grid(const std::string& spec);

/// Applies one `key=value` assignment with dotted keys (slit.a=0.1 ...).
/// `where` names the source (e.g. "line 3") for diagnostics.
void apply_assignment(ExperimentConfig& config, const std::string& key, const std::string& value,
                      const std::string& where);

/// Flat key=value file; '#' comments and blank lines ignored.
void load_config_file(ExperimentConfig& config, const std::string& path);

/// Paper-parameter presets: fig2 (free, k_m=1e8), fig3 (oscillator,
/// n_max=250), fig4 (pattern comparison at the four published times).
void apply_preset(ExperimentConfig& config, const std::string& name);

/// Cross-field invariants; throws ConfigError with a field diagnostic.
void validate(const ExperimentConfig& config);

}  // namespace locstate::cli
