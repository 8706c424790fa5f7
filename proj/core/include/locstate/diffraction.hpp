#pragma once

#include <vector>

#include "locstate/types.hpp"

namespace locstate::diffraction {

/// Screen at x = D, illuminated by a plane wave with longitudinal
/// wavenumber k_x; particles cross at v_x = (hbar/m) k_x, so the pattern on
/// the screen is the slit state evolved for T = D / v_x.
struct ScreenGeometry {
    double distance_D;
    double k_x;
    PhysicalConstants constants{};

    ScreenGeometry(double distance, double kx, PhysicalConstants pc = {})
        : distance_D(distance), k_x(kx), constants(pc) {
        if (!(distance_D > 0.0) || !std::isfinite(distance_D))
            throw std::invalid_argument("ScreenGeometry: distance_D must be positive and finite");
        if (!(k_x > 0.0) || !std::isfinite(k_x))
            throw std::invalid_argument("ScreenGeometry: k_x must be positive and finite");
    }
};

enum class Regime { Fresnel, Transition, Fraunhofer };

/// Quantitative distance between an observed pattern and a reference
/// pattern on a common grid, both individually normalized.
struct ComparisonReport {
    double fresnel_number = 0.0;
    double l2_distance = 0.0;
    double linf_distance = 0.0;
    double peak_ratio = 0.0;
    Regime regime = Regime::Transition;
};

/// T = D / ((hbar/m) k_x).
double time_of_flight(const ScreenGeometry& screen);

/// N_F = a^2 / (8 pi (hbar/m) T); requires T > 0.
double fresnel_number(const SlitSpec& slit, double flight_time);

/// Regime classification: Fraunhofer below 0.1, Fresnel above 0.5,
/// Transition between (reporting convention; the raw N_F is always carried).
Regime classify_regime(double fresnel_number);

/// Normalized |Psi_x Psi_y|^2 on the screen. |Psi_x|^2 is a constant
/// factor, so this is the normalized free-state density at t = T.
SampledDensity product_density(const SlitSpec& slit, const ScreenGeometry& screen,
                               const std::vector<double>& grid_y);

/// Same pattern driven by the flight time directly.
SampledDensity product_density_at_time(const SlitSpec& slit, double flight_time,
                                       const std::vector<double>& grid_y);

/// Momentum-space sinc^2 placed on the screen through the stationary-phase
/// map k = (y - y0) / ((hbar/m) T): normalized density proportional to
/// (sin(alpha)/alpha)^2 with alpha = a (y - y0) / (2 (hbar/m) T).
SampledDensity fraunhofer_mapped_reference(const SlitSpec& slit, double flight_time,
                                           const std::vector<double>& grid_y);

/// L2/Linf distances and peak ratio of two normalized densities on the same
/// grid; `fresnel_number` is carried through to the report and classified.
ComparisonReport compare_patterns(const SampledDensity& observed, const SampledDensity& reference,
                                  double fresnel_number);

/// Transverse guidance velocity v_y = (hbar/m) Im(Psi'/Psi) of the
/// infinite-cutoff state, with the analytic y-derivative of the erf closed
/// form. Throws near nodes (|Psi| <= 1e-12).
double bohm_velocity_y(const SlitSpec& slit, double y, double t);

/// The guidance field oscillates in time like exp(i u^2 / (2 (hbar/m) t))
/// near the collapse instant (u = distance to a slit edge), so no fixed step
/// resolves t -> 0. Each trajectory instead starts at
/// t_start = u^2 / (2 edge_shield^2 (hbar/m)) — while the sqrt(2 (hbar/m) t)
/// diffraction layer is still edge_shield times narrower than u the point
/// has not moved — and RK4 then walks a geometric time ladder with ratio
/// exp(log_step), which keeps every local chirp period resolved. Output is
/// sampled on `samples` uniform instants.
struct TrajectoryOptions {
    int samples = 2000;        // uniform output instants over [0, T]
    double log_step = 2e-3;    // geometric ladder ratio = exp(log_step)
    double edge_shield = 16.0; // start once the layer is this many times thinner than u
    int max_halvings = 40;     // node-rejection recursion cap per ladder step
};

/// One trajectory from y_start (strictly inside the slit) at t=0; returns
/// samples+1 positions at the uniform instants T i / samples.
std::vector<double> integrate_trajectory(const SlitSpec& slit, double y_start, double flight_time,
                                         const TrajectoryOptions& options = {});

struct TrajectoryFan {
    std::vector<double> times;                // samples+1 uniform instants
    std::vector<std::vector<double>> paths;   // one path per launch point
};

/// `count` trajectories launched from the midpoint lattice
/// y0 - a/2 + a (i + 1/2)/count (a stratified sample of the collapsed
/// state's uniform density).
TrajectoryFan trajectory_fan(const SlitSpec& slit, double flight_time, int count,
                             const TrajectoryOptions& options = {});

/// Endpoints only, computed in parallel (deterministic per launch index).
std::vector<double> trajectory_endpoints(const SlitSpec& slit, double flight_time, int count,
                                         const TrajectoryOptions& options = {});

}  // namespace locstate::diffraction
