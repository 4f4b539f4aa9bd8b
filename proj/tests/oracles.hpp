// Independent reference implementations used only by tests. Deliberately
// built on different methods than the library: recursive adaptive Simpson
// instead of Gauss-Kronrod, Lanczos complex log-gamma instead of the
// digamma-plus-arctangent series.
#pragma once

#include <complex>
#include <functional>

namespace oracles {

/// Recursive adaptive Simpson quadrature with absolute tolerance.
double simpson(const std::function<double(double)>& f, double a, double b, double abs_tol,
               int max_depth = 52);

/// Two-phase wrapper: coarse pass for scale, then refinement to rel_tol.
double simpson_rel(const std::function<double(double)>& f, double a, double b, double rel_tol);

/// Reference K_0(x) and K_1(x) from their integral representations.
double bessel_k0(double x);
double bessel_k1(double x);

/// Reference K_{ig}(x) by Simpson quadrature of the defining integral.
double bessel_k_im(double g, double x, double rel_tol = 1e-13);

/// Lanczos log-gamma for complex argument, Re(z) > 0.
std::complex<double> log_gamma(std::complex<double> z);

/// arg Gamma(1 + k + i g) via the Lanczos route.
double arg_gamma(int k, double g);

}  // namespace oracles
