#include "locstate/diffraction.hpp"

#include <cmath>
#include <string>

#include "detail/parallel.hpp"
#include "locstate/freestate.hpp"
#include "locstate/numerics.hpp"

namespace locstate::diffraction {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

struct AmplitudeAndSlope {
    Complex psi;
    Complex dpsi;
};

// Limit-evaluator amplitude and its y-derivative: d/dy erf(u/w) is a
// Gaussian of complex width, so the slope is a difference of two of them.
AmplitudeAndSlope limit_with_derivative(const SlitSpec& slit, double y, double t) {
    const Complex w = std::sqrt(Complex(0.0, 2.0 * slit.constants.hbar_over_m * t));
    const Complex z1 = (y - slit.lower()) / w;
    const Complex z2 = (y - slit.upper()) / w;
    const Complex psi = freestate::evaluate_limit(slit, y, t);
    const Complex dpsi =
        (std::exp(-z1 * z1) - std::exp(-z2 * z2)) / (w * kSqrtPi * std::sqrt(slit.width_a));
    return {psi, dpsi};
}

double velocity_or_throw(const SlitSpec& slit, double y, double t) {
    if (t == 0.0) {
        // flat phase at the collapse instant
        if (std::fabs(y - slit.center_y0) > 0.5 * slit.width_a)
            throw std::domain_error("bohm_velocity_y: node (outside slit at t=0)");
        return 0.0;
    }
    const auto [psi, dpsi] = limit_with_derivative(slit, y, t);
    if (std::abs(psi) <= 1e-12)
        throw std::domain_error("bohm_velocity_y: node (|Psi| <= 1e-12)");
    return slit.constants.hbar_over_m * std::imag(dpsi / psi);
}

}  // namespace

double time_of_flight(const ScreenGeometry& screen) {
    return screen.distance_D / (screen.constants.hbar_over_m * screen.k_x);
}

double fresnel_number(const SlitSpec& slit, double flight_time) {
    if (!(flight_time > 0.0) || !std::isfinite(flight_time))
        throw std::invalid_argument("fresnel_number: flight time must be positive");
    return slit.width_a * slit.width_a /
           (8.0 * kPi * slit.constants.hbar_over_m * flight_time);
}

Regime classify_regime(double fresnel_number) {
    if (fresnel_number < 0.1) return Regime::Fraunhofer;
    if (fresnel_number > 0.5) return Regime::Fresnel;
    return Regime::Transition;
}

SampledDensity product_density(const SlitSpec& slit, const ScreenGeometry& screen,
                               const std::vector<double>& grid_y) {
    return product_density_at_time(slit, time_of_flight(screen), grid_y);
}

SampledDensity product_density_at_time(const SlitSpec& slit, double flight_time,
                                       const std::vector<double>& grid_y) {
    return freestate::density_profile(slit, grid_y, flight_time, /*normalize=*/true);
}

SampledDensity fraunhofer_mapped_reference(const SlitSpec& slit, double flight_time,
                                           const std::vector<double>& grid_y) {
    if (!(flight_time > 0.0) || !std::isfinite(flight_time))
        throw std::invalid_argument("fraunhofer_mapped_reference: flight time must be positive");
    validate_grid(grid_y);
    const double scale = slit.width_a / (2.0 * slit.constants.hbar_over_m * flight_time);
    SampledDensity out;
    out.grid_y = grid_y;
    out.density.assign(grid_y.size(), 0.0);
    out.time_t = flight_time;
    for (std::size_t i = 0; i < grid_y.size(); ++i) {
        const double alpha = scale * (grid_y[i] - slit.center_y0);
        const double r = (alpha == 0.0) ? 1.0 : std::sin(alpha) / alpha;
        out.density[i] = r * r;
    }
    const double total = trapezoid(out.grid_y, out.density);
    for (double& d : out.density) d /= total;
    out.normalized = true;
    return out;
}

ComparisonReport compare_patterns(const SampledDensity& observed, const SampledDensity& reference,
                                  double fresnel_number) {
    if (observed.grid_y.size() != reference.grid_y.size())
        throw std::invalid_argument("compare_patterns: grid mismatch");
    for (std::size_t i = 0; i < observed.grid_y.size(); ++i)
        if (observed.grid_y[i] != reference.grid_y[i])
            throw std::invalid_argument("compare_patterns: grid mismatch");
    if (!observed.normalized || !reference.normalized)
        throw std::invalid_argument("compare_patterns: densities must be normalized");

    ComparisonReport report;
    report.fresnel_number = fresnel_number;
    report.regime = classify_regime(fresnel_number);
    double linf = 0.0;
    double peak_observed = 0.0, peak_reference = 0.0;
    std::vector<double> squared(observed.grid_y.size());
    for (std::size_t i = 0; i < observed.grid_y.size(); ++i) {
        const double d = observed.density[i] - reference.density[i];
        squared[i] = d * d;
        linf = std::max(linf, std::fabs(d));
        peak_observed = std::max(peak_observed, observed.density[i]);
        peak_reference = std::max(peak_reference, reference.density[i]);
    }
    report.l2_distance = std::sqrt(trapezoid(observed.grid_y, squared));
    report.linf_distance = linf;
    report.peak_ratio = peak_observed / peak_reference;
    return report;
}

double bohm_velocity_y(const SlitSpec& slit, double y, double t) {
    if (!std::isfinite(y) || !std::isfinite(t))
        throw std::domain_error("bohm_velocity_y: non-finite argument");
    return velocity_or_throw(slit, y, t);
}

namespace {

// One RK4 step from t over h, halving (recursively, capped) when a stage
// lands on a node of the guidance field.
double rk4_step(const SlitSpec& slit, double y, double t, double h, int halvings_left) {
    try {
        const double k1 = velocity_or_throw(slit, y, t);
        const double k2 = velocity_or_throw(slit, y + 0.5 * h * k1, t + 0.5 * h);
        const double k3 = velocity_or_throw(slit, y + 0.5 * h * k2, t + 0.5 * h);
        const double k4 = velocity_or_throw(slit, y + h * k3, t + h);
        return y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    } catch (const std::domain_error&) {
        if (halvings_left <= 0)
            throw std::domain_error("integrate_trajectory: persistent node below the step floor");
        const double mid = rk4_step(slit, y, t, 0.5 * h, halvings_left - 1);
        return rk4_step(slit, mid, t + 0.5 * h, 0.5 * h, halvings_left - 1);
    }
}

}  // namespace

std::vector<double> integrate_trajectory(const SlitSpec& slit, double y_start, double flight_time,
                                         const TrajectoryOptions& options) {
    if (!(flight_time > 0.0) || !std::isfinite(flight_time))
        throw std::invalid_argument("integrate_trajectory: flight time must be positive");
    if (options.samples < 1)
        throw std::invalid_argument("integrate_trajectory: samples must be >= 1");
    const double edge_distance =
        0.5 * slit.width_a - std::fabs(y_start - slit.center_y0);
    if (!(edge_distance > 0.0))
        throw std::invalid_argument("integrate_trajectory: launch point must be inside the slit");

    const double hm = slit.constants.hbar_over_m;
    const double t_start = std::min(
        edge_distance * edge_distance / (2.0 * options.edge_shield * options.edge_shield * hm),
        flight_time);
    const int ladder_steps = std::max(
        200, static_cast<int>(std::ceil(std::log(flight_time / t_start) / options.log_step)));
    const double ratio = std::pow(flight_time / t_start, 1.0 / ladder_steps);

    std::vector<double> path;
    path.reserve(static_cast<std::size_t>(options.samples) + 1);
    path.push_back(y_start);

    double y = y_start;
    double t = t_start;
    int rung = 0;
    for (int i = 1; i <= options.samples; ++i) {
        const double t_sample = flight_time * i / options.samples;
        if (t_sample <= t_start) {  // layer has not reached the point yet
            path.push_back(y_start);
            continue;
        }
        while (t < t_sample) {
            ++rung;
            const double t_next = std::min(t_start * std::pow(ratio, rung), t_sample);
            if (t_next > t) {
                y = rk4_step(slit, y, t, t_next - t, options.max_halvings);
                t = t_next;
            }
        }
        path.push_back(y);
    }
    return path;
}

TrajectoryFan trajectory_fan(const SlitSpec& slit, double flight_time, int count,
                             const TrajectoryOptions& options) {
    if (count < 1) throw std::invalid_argument("trajectory_fan: count must be >= 1");
    TrajectoryFan fan;
    fan.times.resize(static_cast<std::size_t>(options.samples) + 1);
    for (int i = 0; i <= options.samples; ++i)
        fan.times[static_cast<std::size_t>(i)] = flight_time * i / options.samples;
    fan.paths.resize(static_cast<std::size_t>(count));
    detail::parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
        const double y_start =
            slit.lower() + slit.width_a * (static_cast<double>(i) + 0.5) / count;
        fan.paths[i] = integrate_trajectory(slit, y_start, flight_time, options);
    });
    return fan;
}

std::vector<double> trajectory_endpoints(const SlitSpec& slit, double flight_time, int count,
                                         const TrajectoryOptions& options) {
    if (count < 1) throw std::invalid_argument("trajectory_endpoints: count must be >= 1");
    std::vector<double> endpoints(static_cast<std::size_t>(count));
    detail::parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
        const double y_start =
            slit.lower() + slit.width_a * (static_cast<double>(i) + 0.5) / count;
        endpoints[i] = integrate_trajectory(slit, y_start, flight_time, options).back();
    });
    return endpoints;
}

}  // namespace locstate::diffraction
