#include "run.hpp"

#include <cstdio>
#include <fstream>

#include "emit.hpp"
#include "locstate/diffraction.hpp"
#include "locstate/freestate.hpp"
#include "locstate/potentialstate.hpp"

namespace locstate::cli {

namespace {

std::string time_suffix(double t) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", t);
    return std::string("_t") + buffer;
}

std::string extension(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return ".csv";
        case OutputFormat::Json: return ".json";
        case OutputFormat::Svg: return ".svg";
    }
    return ".csv";
}

std::vector<double> resolve_grid(const ExperimentConfig& config, const SlitSpec& slit, double t) {
    if (config.grid) {
        std::vector<double> grid(static_cast<std::size_t>(config.grid->points));
        const double step = (config.grid->max - config.grid->min) / (config.grid->points - 1);
        for (int i = 0; i < config.grid->points; ++i)
            grid[static_cast<std::size_t>(i)] = config.grid->min + step * i;
        return grid;
    }
    return freestate::default_grid(slit, t);
}

std::vector<double> evolution_times(const ExperimentConfig& config, const SlitSpec& slit) {
    if (!config.times.empty()) return config.times;
    const diffraction::ScreenGeometry screen(*config.screen_distance, *config.screen_kx,
                                             slit.constants);
    return {diffraction::time_of_flight(screen)};
}

void emit_density(const ExperimentConfig& config, const SampledDensity& density,
                  const std::string& base, double t, std::vector<std::string>& written) {
    const std::string path = base + time_suffix(t) + extension(config.format);
    if (config.format == OutputFormat::Csv)
        emit_csv(density, path);
    else
        emit_svg(density, nullptr, path);
    written.push_back(path);
}

}  // namespace

std::vector<std::string> run(const ExperimentConfig& config) {
    validate(config);
    const PhysicalConstants constants(config.hbar_over_m);
    const SlitSpec slit(config.slit_a, config.slit_y0, constants);
    const Mode mode = *config.mode;

    std::string base = config.out_path;
    if (base.empty()) base = "locstate";

    if ((mode == Mode::Free || mode == Mode::Oscillator || mode == Mode::Diffraction) &&
        config.format == OutputFormat::Json)
        throw ConfigError("json output applies to compare mode (density profiles are csv or svg)");
    if (mode == Mode::Trajectories && config.format != OutputFormat::Csv)
        throw ConfigError("trajectories mode writes csv");
    if (mode == Mode::MeanEnergy && config.format != OutputFormat::Csv)
        throw ConfigError("mean-energy mode writes csv");

    std::vector<std::string> written;

    switch (mode) {
        case Mode::Free: {
            for (double t : evolution_times(config, slit)) {
                const auto grid = resolve_grid(config, slit, t);
                const SampledDensity density =
                    config.cutoff_km
                        ? freestate::density_profile(
                              freestate::FreeLocationState(slit, *config.cutoff_km), grid, t, true)
                        : freestate::density_profile(slit, grid, t, true);
                emit_density(config, density, base, t, written);
            }
            break;
        }
        case Mode::Oscillator: {
            const potentialstate::OscillatorBasis basis(
                config.omega, config.cutoff_nmax.value_or(250), constants);
            const auto state = potentialstate::project_coefficients(basis, slit);
            for (double t : evolution_times(config, slit)) {
                const auto grid = config.grid
                                      ? resolve_grid(config, slit, t)
                                      : potentialstate::default_grid(basis, slit);
                emit_density(config, potentialstate::density_profile(state, grid, t, true), base,
                             t, written);
            }
            break;
        }
        case Mode::Diffraction: {
            for (double t : evolution_times(config, slit)) {
                const auto grid = resolve_grid(config, slit, t);
                emit_density(config, diffraction::product_density_at_time(slit, t, grid), base, t,
                             written);
            }
            break;
        }
        case Mode::Compare: {
            for (double t : evolution_times(config, slit)) {
                const auto grid = resolve_grid(config, slit, t);
                const auto observed = diffraction::product_density_at_time(slit, t, grid);
                const auto reference = diffraction::fraunhofer_mapped_reference(slit, t, grid);
                const auto report = diffraction::compare_patterns(
                    observed, reference, diffraction::fresnel_number(slit, t));
                const std::string stem = base + time_suffix(t);
                emit_json(report, stem + ".json");
                written.push_back(stem + ".json");
                if (config.format == OutputFormat::Svg) {
                    emit_svg(observed, &reference, stem + ".svg");
                    written.push_back(stem + ".svg");
                } else if (config.format == OutputFormat::Csv) {
                    emit_csv(observed, stem + "_observed.csv");
                    emit_csv(reference, stem + "_reference.csv");
                    written.push_back(stem + "_observed.csv");
                    written.push_back(stem + "_reference.csv");
                }
            }
            break;
        }
        case Mode::Trajectories: {
            for (double t : evolution_times(config, slit)) {
                const auto fan = diffraction::trajectory_fan(slit, t, 50);
                const std::string path = base + time_suffix(t) + ".csv";
                emit_trajectories_csv(fan, path);
                written.push_back(path);
            }
            break;
        }
        case Mode::MeanEnergy: {
            std::vector<double> cutoffs = config.times;  // times double as the cutoff sweep
            if (cutoffs.empty() && config.cutoff_km) cutoffs = {*config.cutoff_km};
            const std::string path = base + ".csv";
            auto out = std::ofstream();
            out.open(path, std::ios::binary);
            if (!out) throw IoError("cannot write '" + path + "'");
            out << "km,mean_energy\n";
            for (double km : cutoffs) {
                const freestate::FreeLocationState state(slit, km);
                char line[96];
                std::snprintf(line, sizeof(line), "%.17g,%.17g\n", km,
                              freestate::mean_energy(state));
                out << line;
            }
            out.flush();
            if (!out) throw IoError("write failed for '" + path + "'");
            written.push_back(path);
            break;
        }
    }
    return written;
}

}  // namespace locstate::cli
