#include "locstate/freestate.hpp"

#include <cmath>
#include <string>

#include "detail/parallel.hpp"
#include "locstate/numerics.hpp"

namespace locstate::freestate {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": non-finite argument");
}

// G(s) = int_{-km}^{km} exp(i(k s - beta k^2)) dk for beta != 0, via
// completing the square: with w = sqrt(i beta) (principal branch, phase
// +pi/4 for beta > 0) and c = s/(2 beta),
//   G = e^{i s^2/(4 beta)} (sqrt(pi)/(2w)) [erf(w(km-c)) + erf(w(km+c))].
// Outside the band (|c| > km) the two erf saturate with opposite signs, so
// the bracket is rewritten as a difference of erfc to keep full relative
// accuracy.
Complex band_chirp_integral(double s, double beta, double km) {
    const Complex w = std::sqrt(Complex(0.0, beta));
    const double c = s / (2.0 * beta);
    const Complex chirp = std::exp(Complex(0.0, 0.25 * s * s / beta));
    const double ac = std::fabs(c);
    Complex bracket;
    if (ac <= km)
        bracket = numerics::complex_erf(w * (km - c)) + numerics::complex_erf(w * (km + c));
    else
        bracket = numerics::complex_erfc(w * (ac - km)) - numerics::complex_erfc(w * (ac + km));
    return chirp * (kSqrtPi / (2.0 * w)) * bracket;
}

}  // namespace

Complex rectangular_state(const SlitSpec& slit, double y) {
    require_finite(y, "rectangular_state");
    if (std::fabs(y - slit.center_y0) <= 0.5 * slit.width_a)
        return Complex(1.0 / std::sqrt(slit.width_a), 0.0);
    return Complex(0.0, 0.0);
}

Complex momentum_amplitude(const SlitSpec& slit, double p) {
    require_finite(p, "momentum_amplitude");
    const double a = slit.width_a;
    double magnitude;
    if (p == 0.0)
        magnitude = std::sqrt(a / (2.0 * kPi));
    else
        magnitude = 2.0 * std::sin(0.5 * a * p) / (p * std::sqrt(2.0 * kPi * a));
    return magnitude * std::exp(Complex(0.0, -p * slit.center_y0));
}

double fraunhofer_reference(const SlitSpec& slit, double alpha) {
    require_finite(alpha, "fraunhofer_reference");
    const double scale = slit.width_a / (2.0 * kPi);
    if (alpha == 0.0) return scale;
    const double r = std::sin(alpha) / alpha;
    return scale * r * r;
}

Complex evaluate_truncated(const FreeLocationState& state, double y, double t,
                           const EvalOptions& options) {
    require_finite(y, "evaluate_truncated");
    require_finite(t, "evaluate_truncated");
    const SlitSpec& slit = state.slit;
    const double a = slit.width_a;
    const double km = state.cutoff_km;

    if (t == 0.0) {
        // G(s, 0) = 2 sin(km s)/s integrates to sine integrals over the slit.
        const double hi = km * (y - slit.lower());
        const double lo = km * (y - slit.upper());
        const double v = (numerics::sine_integral(hi) - numerics::sine_integral(lo)) / (kPi * std::sqrt(a));
        return Complex(v, 0.0);
    }

    const double beta = 0.5 * slit.constants.hbar_over_m * t;
    const double prefactor = 1.0 / (2.0 * kPi * std::sqrt(a));
    const auto kernel = [&](double yp) { return band_chirp_integral(y - yp, beta, km); };
    // Doubling ladder on the total node count; above the single-rule order
    // cap the slit is split into equal panels of order 1024.
    const auto slit_integral = [&](int total_order) {
        if (total_order <= 2048) {
            const auto& rule = numerics::gauss_legendre_cached(total_order);
            return numerics::integrate(rule, slit.lower(), slit.upper(), kernel);
        }
        const int panels = (total_order + 1023) / 1024;
        const auto& rule = numerics::gauss_legendre_cached(1024);
        Complex acc(0.0, 0.0);
        const double width = slit.width_a / panels;
        for (int p = 0; p < panels; ++p)
            acc += numerics::integrate(rule, slit.lower() + p * width,
                                       slit.lower() + (p + 1) * width, kernel);
        return acc;
    };
    Complex previous;
    bool have_previous = false;
    Complex value;
    for (int order = options.initial_order;; order *= 2) {
        value = prefactor * slit_integral(order);
        if (have_previous && std::abs(value - previous) < options.tolerance) break;
        if (order >= options.max_order) break;
        previous = value;
        have_previous = true;
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::domain_error("evaluate_truncated: non-finite result");
    return value;
}

Complex evaluate_limit(const SlitSpec& slit, double y, double t) {
    require_finite(y, "evaluate_limit");
    require_finite(t, "evaluate_limit");
    if (t == 0.0) return rectangular_state(slit, y);

    const Complex w = std::sqrt(Complex(0.0, 2.0 * slit.constants.hbar_over_m * t));
    const double u1 = y - slit.lower();
    const double u2 = y - slit.upper();
    Complex diff;  // erf(u1/w) - erf(u2/w), cancellation-free in the tails
    if (u1 >= 0.0 && u2 <= 0.0)
        diff = numerics::complex_erf(u1 / w) - numerics::complex_erf(u2 / w);
    else if (u2 > 0.0)
        diff = numerics::complex_erfc(u2 / w) - numerics::complex_erfc(u1 / w);
    else
        diff = numerics::complex_erfc(-u1 / w) - numerics::complex_erfc(-u2 / w);
    const Complex value = diff / (2.0 * std::sqrt(slit.width_a));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::domain_error("evaluate_limit: non-finite result");
    return value;
}

double truncated_norm(const FreeLocationState& state) {
    // 2 pi int |c(k)|^2 dk with c(k) = sin(a k/2) e^{-i k y0} / (pi k sqrt(a)):
    //   (2/pi) Si(a km) - 4 sin^2(a km / 2) / (pi a km)
    const double a = state.slit.width_a;
    const double km = state.cutoff_km;
    const double s = std::sin(0.5 * a * km);
    return (2.0 / kPi) * numerics::sine_integral(a * km) - 4.0 * s * s / (kPi * a * km);
}

double mean_energy(const FreeLocationState& state) {
    const double a = state.slit.width_a;
    const double km = state.cutoff_km;
    const double hm = state.slit.constants.hbar_over_m;
    // numerator: int |c|^2 (hbar/m) k^2/2 dk = (hbar/m)/(pi^2 a) (km/2 - sin(a km)/(2a))
    // denominator: int |c|^2 dk = (2/(pi^2 a)) ((a/2) Si(a km) - sin^2(a km/2)/km)
    const double numerator = hm / (kPi * kPi * a) * (0.5 * km - std::sin(a * km) / (2.0 * a));
    const double s = std::sin(0.5 * a * km);
    const double denominator =
        2.0 / (kPi * kPi * a) * (0.5 * a * numerics::sine_integral(a * km) - s * s / km);
    return numerator / denominator;
}

SampledDensity density_profile(const std::function<Complex(double)>& amplitude,
                               const std::vector<double>& grid_y, double t, bool normalize) {
    validate_grid(grid_y);
    SampledDensity out;
    out.grid_y = grid_y;
    out.density.assign(grid_y.size(), 0.0);
    out.time_t = t;
    detail::parallel_for(grid_y.size(), [&](std::size_t i) {
        out.density[i] = std::norm(amplitude(grid_y[i]));
    });
    for (double d : out.density)
        if (!std::isfinite(d)) throw std::domain_error("density_profile: non-finite density");
    if (normalize) {
        const double total = trapezoid(out.grid_y, out.density);
        if (!(total > 0.0)) throw std::domain_error("density_profile: vanishing norm on grid");
        for (double& d : out.density) d /= total;
        out.normalized = true;
    }
    return out;
}

SampledDensity density_profile(const FreeLocationState& state, const std::vector<double>& grid_y,
                               double t, bool normalize, const EvalOptions& options) {
    return density_profile(
        [&](double y) { return evaluate_truncated(state, y, t, options); }, grid_y, t, normalize);
}

SampledDensity density_profile(const SlitSpec& slit, const std::vector<double>& grid_y, double t,
                               bool normalize) {
    return density_profile([&](double y) { return evaluate_limit(slit, y, t); }, grid_y, t,
                           normalize);
}

std::vector<double> default_grid(const SlitSpec& slit, double t, int points) {
    if (points < 2) throw std::invalid_argument("default_grid: points must be >= 2");
    const double k_typical = 2.0 * kPi / slit.width_a;
    const double half = std::max(2.0 * slit.width_a,
                                 4.0 * slit.constants.hbar_over_m * std::fabs(t) * k_typical);
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double lo = slit.center_y0 - half;
    const double step = 2.0 * half / (points - 1);
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
    return grid;
}

}  // namespace locstate::freestate
