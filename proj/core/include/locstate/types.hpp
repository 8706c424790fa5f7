#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace locstate {

using Complex = std::complex<double>;

/// Physical constants enter every formula only through the ratio hbar/m
/// (units length^2/time). Energies and momenta are expressed in units of
/// hbar throughout, so E(k) = (hbar/m) k^2 / 2 is a phase rate.
struct PhysicalConstants {
    double hbar_over_m = 1.0;

    constexpr PhysicalConstants() = default;
    explicit PhysicalConstants(double hbar_over_m_) : hbar_over_m(hbar_over_m_) {
        if (!(hbar_over_m > 0.0) || !std::isfinite(hbar_over_m))
            throw std::invalid_argument("PhysicalConstants: hbar_over_m must be positive and finite");
    }
};

/// A detection slit: the collapsed state is 1/sqrt(a) on
/// [y0 - a/2, y0 + a/2] (closed interval) and 0 outside.
struct SlitSpec {
    double width_a = 0.1;
    double center_y0 = 0.0;
    PhysicalConstants constants{};

    constexpr SlitSpec() = default;
    SlitSpec(double width, double center, PhysicalConstants pc = {})
        : width_a(width), center_y0(center), constants(pc) {
        if (!(width_a > 0.0) || !std::isfinite(width_a))
            throw std::invalid_argument("SlitSpec: width_a must be positive and finite");
        if (!std::isfinite(center_y0))
            throw std::invalid_argument("SlitSpec: center_y0 must be finite");
    }

    double lower() const { return center_y0 - 0.5 * width_a; }
    double upper() const { return center_y0 + 0.5 * width_a; }
};

/// Probability density |Psi(y,t)|^2 sampled on a strictly increasing grid.
/// When `normalized`, the trapezoidal integral over the grid is 1.
struct SampledDensity {
    std::vector<double> grid_y;
    std::vector<double> density;
    double time_t = 0.0;
    bool normalized = false;
};

/// Trapezoidal integral of `values` over `grid` (fixed sequential order so
/// results do not depend on thread count).
double trapezoid(const std::vector<double>& grid, const std::vector<double>& values);

/// Throws std::invalid_argument unless the grid is finite, strictly
/// increasing and has at least 2 points.
void validate_grid(const std::vector<double>& grid);

}  // namespace locstate
