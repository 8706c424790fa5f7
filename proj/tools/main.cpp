#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "run.hpp"

namespace cli = locstate::cli;

int main(int argc, char** argv) {
    CLI::App app{"location-state diffraction simulator"};
    app.footer("presets: fig2 (free-particle profiles), fig3 (oscillator profiles), "
               "fig4 (pattern comparisons)\n"
               "exit codes: 0 ok, 2 config error, 3 numerical error, 4 i/o error");

    std::string config_path, times_csv, grid_spec, format_word, out_path, preset;
    double a = 0.0, y0 = 0.0, hbar_over_m = 0.0, km = 0.0, screen_distance = 0.0, kx = 0.0,
           omega = 0.0;
    int nmax = 0;

    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--a", a, "slit width");
    app.add_option("--y0", y0, "slit center");
    app.add_option("--hbar-over-m", hbar_over_m, "hbar/m (default 1)");
    auto* km_opt = app.add_option("--km", km, "spectral cutoff k_m (free/diffraction)");
    auto* nmax_opt = app.add_option("--nmax", nmax, "eigenstate cutoff n_max (oscillator)");
    km_opt->excludes(nmax_opt);
    app.add_option("--omega", omega, "oscillator angular frequency (default 1)");
    app.add_option("--times", times_csv, "comma-separated evolution times "
                                         "(mean-energy: cutoff sweep)");
    app.add_option("--screen-D", screen_distance, "screen distance D");
    app.add_option("--kx", kx, "longitudinal wavenumber k_x");
    app.add_option("--grid", grid_spec, "sampling grid MIN:MAX:N");
    app.add_option("--format", format_word, "output format: csv|json|svg");
    app.add_option("--out", out_path, "output basename (one file per time value)");
    app.add_option("--preset", preset, "named parameter set: fig2|fig3|fig4");

    for (const char* name :
         {"free", "oscillator", "diffraction", "compare", "trajectories", "mean-energy"}) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();  // mode flags stay on the parent
    }
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        cli::ExperimentConfig config;
        if (!preset.empty()) cli::apply_preset(config, preset);
        if (!config_path.empty()) cli::load_config_file(config, config_path);
        // explicit flags override both the preset and the file
        const auto given = [&](const std::string& flag) { return app.count(flag) > 0; };
        if (!app.get_subcommands().empty())
            config.mode = cli::parse_mode(app.get_subcommands().front()->get_name());
        if (given("--a")) config.slit_a = a;
        if (given("--y0")) config.slit_y0 = y0;
        if (given("--hbar-over-m")) config.hbar_over_m = hbar_over_m;
        if (given("--km")) config.cutoff_km = km;
        if (given("--nmax")) config.cutoff_nmax = nmax;
        if (given("--omega")) config.omega = omega;
        if (given("--times")) config.times = cli::parse_times(times_csv);
        if (given("--screen-D")) config.screen_distance = screen_distance;
        if (given("--kx")) config.screen_kx = kx;
        if (given("--grid")) config.grid = cli::parse_grid(grid_spec);
        if (given("--format")) config.format = cli::parse_format(format_word);
        if (given("--out")) config.out_path = out_path;

        const auto written = cli::run(config);
        for (const auto& path : written) std::cout << "wrote " << path << "\n";
        return 0;
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cli::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
