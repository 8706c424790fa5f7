#pragma once

#include <functional>
#include <vector>

#include "locstate/types.hpp"

namespace locstate::freestate {

/// Collapsed rectangular state at the measurement instant:
/// 1/sqrt(a) on the closed interval [y0 - a/2, y0 + a/2], 0 outside.
Complex rectangular_state(const SlitSpec& slit, double y);

/// Momentum-space amplitude of the collapsed state. Momenta are expressed
/// in units of hbar (i.e. p is a wavenumber); for an off-center slit the
/// plane-wave phase e^{-i p y0} is applied. Magnitude is
/// 2 sin(a p / 2) / (p sqrt(2 pi a)), with the p = 0 limit sqrt(a/(2 pi)).
Complex momentum_amplitude(const SlitSpec& slit, double p);

/// Fraunhofer single-slit intensity (a/2pi) (sin(alpha)/alpha)^2, with the
/// alpha = 0 limit a/2pi.
double fraunhofer_reference(const SlitSpec& slit, double alpha);

/// Collapsed state expanded over plane waves with |k| <= cutoff_km and
/// evolved by e^{-i (hbar/m) k^2 t / 2} per mode.
struct FreeLocationState {
    SlitSpec slit;
    double cutoff_km = 1e8;

    FreeLocationState(SlitSpec s, double km) : slit(s), cutoff_km(km) {
        if (!(cutoff_km > 0.0) || !std::isfinite(cutoff_km))
            throw std::invalid_argument("FreeLocationState: cutoff_km must be positive and finite");
    }
};

/// Outer quadrature controls for evaluate_truncated. The slit integral uses
/// Gauss-Legendre of `initial_order`, doubling until two successive results
/// differ by less than `tolerance` or `max_order` is reached. The default
/// cap keeps cost bounded in the huge-cutoff regime, where the unresolved
/// residual is the O(1/k_m) band-edge ripple; raise it when k_m is moderate
/// and full resolution of the band edge is wanted.
struct EvalOptions {
    int initial_order = 64;
    int max_order = 1024;
    double tolerance = 1e-10;
};

/// Psi(y, t) of the truncated spectral state. The k integral over
/// [-k_m, k_m] is done in closed form through the complex error function
/// (complete-the-square chirp integral), leaving a smooth slit integral for
/// Gauss-Legendre; cost is therefore independent of k_m. t = 0 reduces to
/// the sine-integral form of the band-limited rectangle. Negative t is the
/// reverse unitary evolution.
Complex evaluate_truncated(const FreeLocationState& state, double y, double t,
                           const EvalOptions& options = {});

/// Exact k_m -> infinity evolution of the rectangle:
/// Psi(y,t) = [erf((y-y0+a/2)/w) - erf((y-y0-a/2)/w)] / (2 sqrt(a)),
/// w = sqrt(2 i (hbar/m) t) on the principal branch. t = 0 returns the
/// rectangle itself.
Complex evaluate_limit(const SlitSpec& slit, double y, double t);

/// Squared norm of the truncated state (closed form). Approaches 1 from
/// below as k_m grows; 1 minus this is the truncation deficit.
double truncated_norm(const FreeLocationState& state);

/// Mean energy <E> of the truncated state in units of hbar, i.e. the mean
/// of the phase rate (hbar/m) k^2 / 2 under |c(k)|^2. Grows without bound
/// in k_m (asymptotically linear).
double mean_energy(const FreeLocationState& state);

/// |amplitude(y)|^2 on a grid; grid points are evaluated in parallel but
/// the result is independent of thread count. If `normalize`, divides by
/// the trapezoidal integral over the grid.
SampledDensity density_profile(const std::function<Complex(double)>& amplitude,
                               const std::vector<double>& grid_y, double t, bool normalize);

/// density_profile with the truncated evaluator.
SampledDensity density_profile(const FreeLocationState& state, const std::vector<double>& grid_y,
                               double t, bool normalize, const EvalOptions& options = {});

/// density_profile with the infinite-cutoff evaluator.
SampledDensity density_profile(const SlitSpec& slit, const std::vector<double>& grid_y, double t,
                               bool normalize);

/// Uniform grid of `points` samples centered on the slit, half-width
/// max(2a, 4 (hbar/m) |t| 2pi/a) so spreading patterns never clip.
std::vector<double> default_grid(const SlitSpec& slit, double t, int points = 2001);

}  // namespace locstate::freestate
