#include "locstate/potentialstate.hpp"

#include <cmath>
#include <string>

#include "detail/parallel.hpp"
#include "locstate/freestate.hpp"
#include "locstate/numerics.hpp"

namespace locstate::potentialstate {

void Eigenbasis::eval_range(double y, std::span<double> out) const {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = eval(static_cast<int>(k), y);
}

OscillatorBasis::OscillatorBasis(double omega, int n_max, PhysicalConstants constants)
    : omega_(omega), sigma_(std::sqrt(constants.hbar_over_m / omega)), n_max_(n_max),
      constants_(constants) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("OscillatorBasis: omega must be positive and finite");
    if (n_max < 0 || n_max > 10000)
        throw std::invalid_argument("OscillatorBasis: n_max out of range [0, 10000]");
}

OscillatorBasis OscillatorBasis::from_sigma(double sigma, int n_max, PhysicalConstants constants) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("OscillatorBasis: sigma must be positive and finite");
    return OscillatorBasis(constants.hbar_over_m / (sigma * sigma), n_max, constants);
}

double OscillatorBasis::energy(int n) const {
    if (n < 0) throw std::invalid_argument("OscillatorBasis: negative level");
    return omega_ * (n + 0.5);
}

double OscillatorBasis::eval(int n, double y) const {
    return numerics::hermite_function(n, y / sigma_) / std::sqrt(sigma_);
}

void OscillatorBasis::eval_range(double y, std::span<double> out) const {
    numerics::hermite_function_range(y / sigma_, out);
    const double scale = 1.0 / std::sqrt(sigma_);
    for (double& v : out) v *= scale;
}

double closure_check(const OscillatorBasis& basis, double y, double y_prime) {
    const double bound = 5.0 * basis.sigma() * std::sqrt(static_cast<double>(basis.n_max()));
    if (!std::isfinite(y) || !std::isfinite(y_prime) || std::fabs(y) > bound ||
        std::fabs(y_prime) > bound)
        throw std::domain_error("closure_check: point outside the included-state envelope");
    const std::size_t count = static_cast<std::size_t>(basis.n_max()) + 1;
    std::vector<double> uy(count), uyp(count);
    basis.eval_range(y, uy);
    basis.eval_range(y_prime, uyp);
    double sum = 0.0;
    for (std::size_t n = 0; n < count; ++n) sum += uy[n] * uyp[n];
    return sum;
}

OscillatorLocationState project_coefficients(const OscillatorBasis& basis, const SlitSpec& slit) {
    const std::size_t count = static_cast<std::size_t>(basis.n_max()) + 1;
    const double inv_sqrt_a = 1.0 / std::sqrt(slit.width_a);

    std::vector<double> coeffs(count, 0.0), previous;
    std::vector<double> values(count);
    // Hermite functions at level n oscillate with local wavelength
    // ~ pi sigma / sqrt(2n); the doubling loop stops once the slit integral
    // of the fastest mode is resolved.
    for (int order = 96;; order *= 2) {
        const auto& rule = numerics::gauss_legendre_cached(order);
        std::fill(coeffs.begin(), coeffs.end(), 0.0);
        const double mid = slit.center_y0;
        const double half = 0.5 * slit.width_a;
        for (int i = 0; i < order; ++i) {
            const double yp = mid + half * rule.nodes[static_cast<std::size_t>(i)];
            basis.eval_range(yp, values);
            const double w = rule.weights[static_cast<std::size_t>(i)] * half * inv_sqrt_a;
            for (std::size_t n = 0; n < count; ++n) coeffs[n] += w * values[n];
        }
        if (!previous.empty()) {
            double delta = 0.0;
            for (std::size_t n = 0; n < count; ++n)
                delta = std::max(delta, std::fabs(coeffs[n] - previous[n]));
            if (delta < 1e-12) break;
        }
        if (order >= 1536) break;
        previous = coeffs;
    }
    return OscillatorLocationState{basis, slit, std::move(coeffs)};
}

Complex evolve(const OscillatorLocationState& state, double y, double t) {
    if (!std::isfinite(y) || !std::isfinite(t))
        throw std::domain_error("evolve: non-finite argument");
    const std::size_t count = state.coefficients.size();
    const double omega = state.basis.omega();
    const double scale = 1.0 / std::sqrt(state.basis.sigma());
    // Stream the eigenfunction recurrence and rotate the phase term by term;
    // nothing of size n_max is stored.
    numerics::HermiteStream stream(y / state.basis.sigma());
    const Complex step = std::exp(Complex(0.0, -omega * t));
    Complex phase = std::exp(Complex(0.0, -0.5 * omega * t));
    Complex sum(0.0, 0.0);
    for (std::size_t n = 0; n < count; ++n) {
        sum += (state.coefficients[n] * scale * stream.next()) * phase;
        phase *= step;
    }
    return sum;
}

SampledDensity density_profile(const OscillatorLocationState& state,
                               const std::vector<double>& grid_y, double t, bool normalize) {
    return freestate::density_profile([&](double y) { return evolve(state, y, t); }, grid_y, t,
                                      normalize);
}

double captured_norm(const OscillatorLocationState& state) {
    double sum = 0.0, comp = 0.0;
    for (double c : state.coefficients) {  // Kahan: the tail terms are tiny
        const double term = c * c - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return sum;
}

std::vector<double> default_grid(const OscillatorBasis& basis, const SlitSpec& slit, int points) {
    if (points < 2) throw std::invalid_argument("default_grid: points must be >= 2");
    const double half =
        basis.sigma() * std::sqrt(2.0 * basis.n_max() + 1.0) + slit.width_a;
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = 2.0 * half / (points - 1);
    for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = -half + step * i;
    return grid;
}

}  // namespace locstate::potentialstate
