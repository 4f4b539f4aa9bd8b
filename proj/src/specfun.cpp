#include "invsq/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace invsq::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Breakpoints for the K_{ig} integrand on [0, T]: fine enough to resolve the
// cos(g t) oscillation (width <= pi/(8g) gives >= 16 points per period under
// the 15-point panel rule).
std::vector<double> kim_breakpoints(double g, double T) {
    const double width = (g > 1.0) ? std::min(1.0, kPi / (8.0 * g)) : 1.0;
    const std::size_t n = static_cast<std::size_t>(std::ceil(T / width));
    std::vector<double> bp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) bp[i] = T * static_cast<double>(i) / n;
    return bp;
}

// Truncation point: exp(-x cosh T) below the absolute floor, plus margin.
double kim_cutoff(double x, double abs_tol) {
    const double floor = std::max(abs_tol, 1e-320);
    return std::acosh(std::max(2.0, std::log(1.0 / floor) / x)) + 5.0;
}

double require_positive(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(who) + ": argument must be positive and finite");
    return x;
}

}  // namespace

ImagOrder::ImagOrder(double g) : g_(g) {
    if (!(g >= 0.0) || !std::isfinite(g))
        throw std::domain_error("ImagOrder: g must be finite and >= 0");
}

ImagOrder ImagOrder::from_rho0_sq(double rho0_sq) {
    if (!(rho0_sq > 0.25))
        throw std::domain_error("ImagOrder: rho0_sq must exceed the critical strength 1/4");
    return ImagOrder(std::sqrt(rho0_sq - 0.25));
}

double bessel_k_im(const ImagOrder& order, double x, const QuadratureSpec& q) {
    require_positive(x, "bessel_k_im");
    q.validate();
    const double g = order.g();
    const double T = kim_cutoff(x, q.abs_tol);
    const auto bp = kim_breakpoints(g, T);
    return integrate([x, g](double t) { return std::exp(-x * std::cosh(t)) * std::cos(g * t); },
                     bp, q);
}

double bessel_k_im_deriv(const ImagOrder& order, double x, const QuadratureSpec& q) {
    require_positive(x, "bessel_k_im_deriv");
    q.validate();
    const double g = order.g();
    const double T = kim_cutoff(x, q.abs_tol);
    const auto bp = kim_breakpoints(g, T);
    return -integrate(
        [x, g](double t) {
            const double c = std::cosh(t);
            const double e = std::exp(-x * c);
            return e == 0.0 ? 0.0 : e * c * std::cos(g * t);
        },
        bp, q);
}

double bessel_k_im_smallx(const ImagOrder& order, double x) {
    require_positive(x, "bessel_k_im_smallx");
    const double g = order.g();
    if (g < 1e-12) {
        // g -> 0 limit of the expression below, the K_0 logarithm.
        return -(std::log(0.5 * x) + euler_gamma);
    }
    const double phi0 = arg_gamma(0, order);
    const double pref =
        std::sqrt(2.0 * kPi * g * std::exp(-kPi * g) / (1.0 - std::exp(-2.0 * kPi * g))) / g;
    return -pref * std::sin(g * std::log(0.5 * x) - phi0);
}

double digamma_int(int m) {
    if (m < 1) throw std::invalid_argument("digamma_int: argument must be >= 1");
    double v = -euler_gamma;
    for (int j = 1; j < m; ++j) v += 1.0 / j;
    return v;
}

double arg_gamma(int k, const ImagOrder& order) {
    if (k < 0) throw std::invalid_argument("arg_gamma: k must be >= 0");
    const double g = order.g();
    if (g == 0.0) return 0.0;

    const double tol = 1e-13;
    const double g3 = g * g * g;
    // Compensated summation: the tail can run to ~10^7 terms for large g and
    // plain accumulation picks up a visible rounding bias.
    double sum = 0.0, comp = 0.0;
    for (double m = 1.0 + k;; m += 1.0) {
        const double y = g / m;
        double term;
        if (y < 0.05) {
            // y - atan(y) by series; avoids an atan call and cancellation.
            const double y2 = y * y;
            term = y * y2 * (1.0 / 3.0 + y2 * (-1.0 / 5.0 + y2 * (1.0 / 7.0 - y2 / 9.0)));
        } else {
            term = y - std::atan(y);
        }
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        if (g3 / (6.0 * m * m) < tol) break;
    }
    return g * digamma_int(1 + k) + sum + comp;
}

double sinc(double z) {
    const double az = std::fabs(z);
    if (az < 1e-4) {
        const double z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sin(z) / z;
}

namespace {

double si_series(double z) {
    // Si(z) = sum_k (-1)^k z^{2k+1} / ((2k+1)(2k+1)!)
    double u = z;  // z^{2k+1}/(2k+1)!
    double sum = z;
    const double z2 = z * z;
    for (int k = 1; k < 60; ++k) {
        u *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = u / (2.0 * k + 1.0);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// Auxiliary functions with Si(z) = pi/2 - f cos z - g sin z. For moderate z
// they are computed from their exponential integral representations
//   f(z) = (1/z)   \int_0^inf e^{-u} / (1 + (u/z)^2) du
//   g(z) = (1/z^2) \int_0^inf u e^{-u} / (1 + (u/z)^2) du,
// for large z from the optimally truncated asymptotic series.
void si_aux(double z, double& f, double& gaux) {
    if (z >= 40.0) {
        const double iz2 = 1.0 / (z * z);
        double a = 1.0, fs = 0.0;
        for (int k = 0; k < 40; ++k) {
            fs += a;
            const double next = -a * (2.0 * k + 1.0) * (2.0 * k + 2.0) * iz2;
            if (std::fabs(next) >= std::fabs(a) || std::fabs(next) < 1e-18) break;
            a = next;
        }
        double b = 1.0, gs = 0.0;
        for (int k = 0; k < 40; ++k) {
            gs += b;
            const double next = -b * (2.0 * k + 2.0) * (2.0 * k + 3.0) * iz2;
            if (std::fabs(next) >= std::fabs(b) || std::fabs(next) < 1e-18) break;
            b = next;
        }
        f = fs / z;
        gaux = gs / (z * z);
        return;
    }
    const QuadratureSpec q{1e-13, 1e-30, 48};
    const double bp[8] = {0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 60.0};
    const std::span<const double> bps(bp, 8);
    const double inv_z2 = 1.0 / (z * z);
    f = integrate([inv_z2](double u) { return std::exp(-u) / (1.0 + u * u * inv_z2); }, bps, q) /
        z;
    gaux = integrate([inv_z2](double u) { return u * std::exp(-u) / (1.0 + u * u * inv_z2); },
                     bps, q) *
           inv_z2;
}

}  // namespace

double sine_integral(double z) {
    if (!(z >= 0.0) || !std::isfinite(z))
        throw std::domain_error("sine_integral: argument must be finite and >= 0");
    if (z == 0.0) return 0.0;
    if (z <= 6.0) return si_series(z);
    double f, gaux;
    si_aux(z, f, gaux);
    return 0.5 * kPi - f * std::cos(z) - gaux * std::sin(z);
}

double l2_integral(int n, double rho) {
    if (!(rho > 0.0) || !(rho <= 1.0))
        throw std::domain_error("l2_integral: rho must lie in (0, 1]");
    if (n == 0) return 0.0;
    const int an = std::abs(n);
    const double npi = an * kPi;
    const double s = std::sin(0.5 * npi * rho);
    const double one_minus_cos_rho = 2.0 * s * s;   // 1 - cos(n pi rho)
    const double one_minus_cos_n = (an % 2 == 0) ? 0.0 : 2.0;  // 1 - cos(n pi), exact
    return one_minus_cos_rho / rho - one_minus_cos_n +
           npi * (sine_integral(npi) - sine_integral(npi * rho));
}

}  // namespace invsq::specfun
