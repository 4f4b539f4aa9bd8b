#pragma once

#include "invsq/quadrature.hpp"

namespace invsq::specfun {

inline constexpr double euler_gamma = 0.57721566490153286061;

/// Imaginary-order parameter g of the Bessel order nu = i*g. Arises as
/// g = sqrt(rho0^2 - 1/4) once the potential strength exceeds the critical
/// value 1/4.
class ImagOrder {
  public:
    explicit ImagOrder(double g);
    static ImagOrder from_rho0_sq(double rho0_sq);

    double g() const { return g_; }
    double rho0_sq() const { return g_ * g_ + 0.25; }

  private:
    double g_;
};

/// K_{ig}(x) from the real integral representation
///   K_{ig}(x) = \int_0^inf exp(-x cosh t) cos(g t) dt,   x > 0.
/// Relative accuracy q.rel_tol for x >= 1e-8 (roundoff-limited in the deeply
/// oscillatory small-x regime at large g).
double bessel_k_im(const ImagOrder& order, double x, const QuadratureSpec& q = {});

/// dK_{ig}/dx by quadrature of the differentiated integrand,
///   -\int_0^inf exp(-x cosh t) cosh(t) cos(g t) dt.
double bessel_k_im_deriv(const ImagOrder& order, double x, const QuadratureSpec& q = {});

/// Small-argument form of K_{ig}:
///   -sqrt(2 pi g e^{-pi g} / (1 - e^{-2 pi g})) (1/g) sin(g ln(x/2) - phi(0)).
/// Tends to the K_0 logarithm as g -> 0.
double bessel_k_im_smallx(const ImagOrder& order, double x);

/// phi(k) = arg Gamma(1 + k + i g)
///        = g psi(1+k) + sum_{n>=0} [ g/(1+k+n) - atan(g/(1+k+n)) ],
/// summed until the analytic tail bound g^3/(6 m^2) drops below 1e-13.
double arg_gamma(int k, const ImagOrder& order);

/// psi(m) for integer m >= 1: psi(1) = -gamma, psi(m) = -gamma + sum_{j<m} 1/j.
double digamma_int(int m);

/// sin(z)/z with the removable singularity handled by series for |z| < 1e-4.
double sinc(double z);

/// Si(z) = \int_0^z sin(t)/t dt for z >= 0. Power series for z <= 6,
/// auxiliary-function evaluation beyond. Absolute accuracy ~1e-12.
double sine_integral(double z);

/// L2(n, rho) = \int_rho^1 (1 - cos(n pi y)) / y^2 dy, closed form via Si.
/// Even in n; zero for n = 0. Requires 0 < rho <= 1.
double l2_integral(int n, double rho);

}  // namespace invsq::specfun
