#pragma once

#include <memory>
#include <span>
#include <vector>

#include "locstate/types.hpp"

namespace locstate::potentialstate {

/// Discrete energy eigenbasis contract: any potential with a discrete
/// spectrum can expand collapsed states through this interface. energy(n)
/// is the phase rate E_n / hbar.
class Eigenbasis {
public:
    virtual ~Eigenbasis() = default;
    virtual double energy(int n) const = 0;
    virtual double eval(int n, double y) const = 0;
    /// Fills out[k] = u_k(y) for k = 0..out.size()-1. The default loops over
    /// eval; bases with a recurrence should override.
    virtual void eval_range(double y, std::span<double> out) const;
};

/// Harmonic oscillator eigenfunctions u_n(y) = phi_n(y/sigma)/sqrt(sigma)
/// with sigma = sqrt((hbar/m)/omega) and E_n/hbar = omega (n + 1/2).
class OscillatorBasis final : public Eigenbasis {
public:
    OscillatorBasis(double omega, int n_max, PhysicalConstants constants = {});
    static OscillatorBasis from_sigma(double sigma, int n_max, PhysicalConstants constants = {});

    double energy(int n) const override;
    double eval(int n, double y) const override;
    void eval_range(double y, std::span<double> out) const override;

    double omega() const { return omega_; }
    double sigma() const { return sigma_; }
    int n_max() const { return n_max_; }
    const PhysicalConstants& constants() const { return constants_; }

private:
    double omega_;
    double sigma_;
    int n_max_;
    PhysicalConstants constants_;
};

/// Collapsed rectangular state projected onto the oscillator basis:
/// coefficients c_n = (1/sqrt a) int_slit u_n(y') dy', real because both
/// the state and the eigenfunctions are real.
struct OscillatorLocationState {
    OscillatorBasis basis;
    SlitSpec slit;
    std::vector<double> coefficients;
};

/// Partial closure sum Sum_{n<=n_max} u_n(y') u_n(y). Diagnostic: it is a
/// delta sequence in n_max (meaningful under integrals against smooth
/// windows, not pointwise). Preconditions |y|, |y'| <= 5 sigma sqrt(n_max).
double closure_check(const OscillatorBasis& basis, double y, double y_prime);

/// Computes the coefficient vector by Gauss-Legendre over the slit,
/// starting at order 96 and doubling until the coefficients are stationary
/// to 1e-12. The prefactor is 1/sqrt(a), so Sum c_n^2 -> 1 as n_max grows.
OscillatorLocationState project_coefficients(const OscillatorBasis& basis, const SlitSpec& slit);

/// Sum_n c_n u_n(y) e^{-i omega (n + 1/2) t}: a single recurrence pass per
/// point, O(n_max) time, O(1) extra storage.
Complex evolve(const OscillatorLocationState& state, double y, double t);

/// |Psi|^2 on a grid (parallel pointwise pass, deterministic), optionally
/// normalized by the trapezoidal integral.
SampledDensity density_profile(const OscillatorLocationState& state,
                               const std::vector<double>& grid_y, double t, bool normalize);

/// Sum c_n^2: the captured fraction of the collapsed state's norm.
double captured_norm(const OscillatorLocationState& state);

/// Uniform symmetric grid wide enough for every included eigenfunction:
/// half-width sigma sqrt(2 n_max + 1) + a.
std::vector<double> default_grid(const OscillatorBasis& basis, const SlitSpec& slit,
                                 int points = 2001);

}  // namespace locstate::potentialstate
