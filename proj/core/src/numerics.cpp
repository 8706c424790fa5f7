#include "locstate/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace locstate::numerics {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPi = 3.14159265358979323846;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Maclaurin series erf(z) = 2/sqrt(pi) sum (-1)^n z^{2n+1} / (n! (2n+1)).
// Relative error ~ eps * max_term / |erf|; bounded by ~1e-13 in the regions
// this is routed to (small |z|, small Re z, or |arg z| >= 60 deg).
Complex erf_series(Complex z) {
    Complex term = z;
    Complex sum = z;
    const Complex z2 = z * z;
    for (int n = 0; n < 4000; ++n) {
        term *= -z2 * ((2.0 * n + 1.0) / ((n + 1.0) * (2.0 * n + 3.0)));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum * (2.0 / kSqrtPi);
        if (std::abs(sum) > 1e290 || std::abs(term) > 1e290)
            throw std::domain_error("complex_erf: result overflows near the imaginary axis");
    }
    throw std::domain_error("complex_erf: series did not converge");
}

// Laplace continued fraction for erfc(z), Re z > 0:
//   erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z+ (1/2)/(z+ 1/(z+ (3/2)/(z+ 2/(z+ ...)))))
// evaluated by the modified Lentz algorithm. Routed only to the sector
// |arg z| < 60 deg where convergence is fast.
Complex erfc_continued_fraction(Complex z) {
    constexpr double tiny = 1e-300;
    Complex f(tiny, 0.0), c(tiny, 0.0), d(0.0, 0.0);
    for (int i = 1; i <= 600; ++i) {
        const double a = (i == 1) ? 1.0 : 0.5 * (i - 1);
        d = z + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = z + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return std::exp(-z * z) * f / kSqrtPi;
    }
    throw std::domain_error("complex_erf: continued fraction did not converge");
}

// After reflection into Re z >= 0: series region is the small disk, the
// strip of small Re z, and the sector above 60 degrees. In all three the
// series keeps ~1e-13 relative accuracy; outside them the continued
// fraction converges quickly.
bool series_region(Complex z) {
    return std::abs(z) <= 3.0 || z.real() <= 1.8 ||
           std::abs(z.imag()) >= 1.7320508075688772 * z.real();
}

}  // namespace

Complex complex_erf(Complex z) {
    if (!finite(z)) throw std::domain_error("complex_erf: non-finite argument");
    if (z.real() < 0.0) return -complex_erf(-z);
    Complex r;
    if (series_region(z))
        r = erf_series(z);
    else
        r = 1.0 - erfc_continued_fraction(z);
    if (!finite(r)) throw std::domain_error("complex_erf: result is not finite");
    return r;
}

Complex complex_erfc(Complex z) {
    if (!finite(z)) throw std::domain_error("complex_erfc: non-finite argument");
    Complex r;
    if (z.real() < 0.0) {
        r = 2.0 - complex_erfc(-z);
    } else if (z.real() > 1.5 && std::abs(z.imag()) < 1.7320508075688772 * z.real()) {
        r = erfc_continued_fraction(z);
    } else {
        r = 1.0 - erf_series(z);
    }
    if (!finite(r)) throw std::domain_error("complex_erfc: result is not finite");
    return r;
}

std::pair<double, double> fresnel_cs(double u) {
    if (!std::isfinite(u)) throw std::domain_error("fresnel_cs: non-finite argument");
    const double h = 0.5 * kSqrtPi * u;
    const Complex e = complex_erf(Complex(h, -h));
    const Complex cs = Complex(0.5, 0.5) * e;
    return {cs.real(), cs.imag()};
}

double sine_integral(double x) {
    if (!std::isfinite(x)) throw std::domain_error("sine_integral: non-finite argument");
    const double ax = std::fabs(x);
    double si;
    if (ax < 1e-150) {
        si = ax;
    } else if (ax <= 2.0) {
        // sum (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
        double term = ax;
        si = ax;
        const double x2 = ax * ax;
        for (int k = 0; k < 60; ++k) {
            term *= -x2 * (2.0 * k + 1.0) / ((2.0 * k + 3.0) * (2.0 * k + 3.0) * (2.0 * k + 2.0));
            si += term;
            if (std::fabs(term) < 1e-17 * std::fabs(si)) break;
        }
    } else {
        // E1(i x) by modified Lentz; then Si(x) = pi/2 + Im(e^{-ix} h).
        constexpr double tiny = 1e-300;
        Complex b(1.0, ax);
        Complex c(1.0 / tiny, 0.0);
        Complex d = 1.0 / b;
        Complex h = d;
        for (int i = 2; i <= 200; ++i) {
            const double a = -static_cast<double>(i - 1) * (i - 1);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            const Complex delta = c * d;
            h *= delta;
            if (std::abs(delta - 1.0) < 1e-16) break;
        }
        h *= Complex(std::cos(ax), -std::sin(ax));
        si = 0.5 * kPi + h.imag();
    }
    return x < 0.0 ? -si : si;
}

HermiteStream::HermiteStream(double x)
    : x_(x), current_(0.0), previous_(0.0), exponent_(0), level_(0), dead_(false) {
    if (!std::isfinite(x)) throw std::domain_error("hermite_function: non-finite argument");
    const double log_phi0 = -0.25 * std::log(kPi) - 0.5 * x * x;
    // |phi_{k+1}| <= (|x| sqrt2 + 1) max(|phi_k|, |phi_{k-1}|): if even 10000
    // recurrence steps cannot lift e^{-x^2/2} back above the underflow
    // threshold, every yielded value is an exact 0.
    const double log_growth = std::log(std::fabs(x) * 1.4142135623730951 + 1.0);
    if (!(log_phi0 + 10000.0 * log_growth >= -805.0)) {
        dead_ = true;
        return;
    }
    // phi_0 = mantissa * 2^exponent; the recurrence runs on the mantissa pair
    // and renormalizes, so intermediate values never overflow or underflow.
    exponent_ = static_cast<long>(std::floor(log_phi0 / 0.6931471805599453));
    current_ = std::exp(log_phi0 - static_cast<double>(exponent_) * 0.6931471805599453);
}

double HermiteStream::next() {
    if (dead_) return 0.0;
    const double out =
        (exponent_ >= -1100 && exponent_ <= 100) ? std::ldexp(current_, static_cast<int>(exponent_)) : 0.0;
    const int k = level_++;
    const double pn = x_ * std::sqrt(2.0 / (k + 1)) * current_ -
                      std::sqrt(static_cast<double>(k) / (k + 1)) * previous_;
    previous_ = current_;
    current_ = pn;
    const double mx = std::max(std::fabs(current_), std::fabs(previous_));
    if (mx > 1e280) {
        current_ *= 0x1p-1000;
        previous_ *= 0x1p-1000;
        exponent_ += 1000;
    } else if (mx > 0.0 && mx < 1e-280) {
        current_ *= 0x1p1000;
        previous_ *= 0x1p1000;
        exponent_ -= 1000;
    }
    return out;
}

double hermite_function(int n, double x) {
    if (n < 0 || n > 10000) throw std::invalid_argument("hermite_function: n out of range [0, 10000]");
    HermiteStream stream(x);
    double value = 0.0;
    for (int k = 0; k <= n; ++k) value = stream.next();
    return value;
}

void hermite_function_range(double x, std::span<double> out) {
    if (out.empty()) return;
    if (out.size() > 10001)
        throw std::invalid_argument("hermite_function_range: n out of range [0, 10000]");
    HermiteStream stream(x);
    for (auto& v : out) v = stream.next();
}

namespace {

// P_order and its derivative at x by the unnormalized Legendre recurrence.
void legendre_pair(int order, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (order == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 1; k < order; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = order * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
    if (order < 1 || order > 2048) throw std::invalid_argument("gauss_legendre: order out of range [1, 2048]");
    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
    rule.weights.assign(static_cast<std::size_t>(order), 0.0);

    const int half = order / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess for the i-th root in (0, 1), then Newton
        // driven all the way to the representable root (dx below one ulp).
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(order, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-16 * std::fabs(x)) break;
        }
        legendre_pair(order, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // mirror pair: exact symmetry by construction
        rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (order % 2 == 1) {
        double p = 0.0, dp = 1.0;
        legendre_pair(order, 0.0, p, dp);
        rule.nodes[static_cast<std::size_t>(half)] = 0.0;
        rule.weights[static_cast<std::size_t>(half)] = 2.0 / (dp * dp);
    }
    return rule;
}

const QuadratureRule& gauss_legendre_cached(int order) {
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, gauss_legendre(order)).first;
    return it->second;
}

}  // namespace locstate::numerics

namespace locstate {

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw std::invalid_argument("trapezoid: grid/value size mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        acc += 0.5 * (values[i] + values[i + 1]) * (grid[i + 1] - grid[i]);
    return acc;
}

void validate_grid(const std::vector<double>& grid) {
    if (grid.size() < 2) throw std::invalid_argument("grid must have at least 2 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw std::invalid_argument("grid must be finite");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
    }
}

}  // namespace locstate
