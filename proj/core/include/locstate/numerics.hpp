#pragma once

#include <span>
#include <utility>
#include <vector>

#include "locstate/types.hpp"

namespace locstate::numerics {

/// Gauss-Legendre rule on [-1, 1]. Nodes are strictly increasing and exactly
/// symmetric about 0; weights are positive and sum to 2.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Error function of a complex argument.
///
/// Series/continued-fraction hybrid: Maclaurin series on the disk |z| <= 3
/// and in the sector |arg z| >= 60 deg (where the series has no damaging
/// cancellation because |erf| grows like exp(Im(z)^2)), Laplace continued
/// fraction for erfc elsewhere. Relative error <= ~1e-13 for |z| <= 10;
/// the continued fraction stays accurate on the e^{+-i pi/4} rays for
/// arbitrarily large |z|, which is the regime the chirp integrals live in.
///
/// Throws std::domain_error for non-finite input and when the result
/// overflows a double (|Im z| large at small |Re z|).
Complex complex_erf(Complex z);

/// Complementary error function, 1 - erf(z), with full relative accuracy in
/// the right half-plane (no cancellation: the continued fraction produces
/// erfc directly). Same error contract as complex_erf.
Complex complex_erfc(Complex z);

/// Fresnel integrals C(u) = int_0^u cos(pi t^2/2) dt and
/// S(u) = int_0^u sin(pi t^2/2) dt, via
/// C + iS = (1+i)/2 * erf(sqrt(pi)/2 (1-i) u). Both odd; -> 1/2 as u -> inf.
std::pair<double, double> fresnel_cs(double u);

/// Sine integral Si(x) = int_0^x sin(t)/t dt. Power series for |x| <= 2,
/// Lentz continued fraction for E1(ix) beyond. Odd; -> pi/2 as x -> inf.
double sine_integral(double x);

/// Orthonormal Hermite function phi_n(x) = (2^n n! sqrt(pi))^{-1/2}
/// e^{-x^2/2} H_n(x), evaluated with the normalized three-term recurrence
///   phi_{n+1} = x sqrt(2/(n+1)) phi_n - sqrt(n/(n+1)) phi_{n-1},
/// carrying a separate binary exponent so that the start value e^{-x^2/2}
/// may underflow a double and still recover for large n. No intermediate
/// overflow for n <= 10000 and any finite x.
double hermite_function(int n, double x);

/// Fills out[k] = phi_k(x) for k = 0..out.size()-1 in one recurrence pass.
void hermite_function_range(double x, std::span<double> out);

/// Streaming form of the same recurrence: successive next() calls yield
/// phi_0(x), phi_1(x), ... without storing the sequence. Shares the
/// exponent-carrying scheme of hermite_function.
class HermiteStream {
public:
    explicit HermiteStream(double x);
    double next();

private:
    double x_;
    double current_;
    double previous_;
    long exponent_;
    int level_;
    bool dead_;
};

/// Nodes and weights by Newton iteration on P_order; node residual
/// |P_order(node)| <= 1e-14. order must be in [1, 2048].
QuadratureRule gauss_legendre(int order);

/// Process-wide memoized rules (thread-safe; the rule for each order is
/// computed once).
const QuadratureRule& gauss_legendre_cached(int order);

/// Integral of f over [a, b] with a rule mapped from [-1, 1].
template <typename F>
auto integrate(const QuadratureRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    decltype(f(a)) acc{};
    for (int i = 0; i < rule.order; ++i)
        acc += rule.weights[static_cast<std::size_t>(i)] * f(mid + half * rule.nodes[static_cast<std::size_t>(i)]);
    return acc * half;
}

}  // namespace locstate::numerics
