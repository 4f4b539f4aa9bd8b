#include "invsq/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace invsq::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// rho_eps_sq below this cannot be tracked in doubles; spectra are truncated.
constexpr double kRhoSqFloor = 1e-280;

double residual_unchecked(const specfun::ImagOrder& order, double rho0_sq, double rho_eps,
                          const QuadratureSpec& q) {
    const double q_eps = std::sqrt(rho0_sq - rho_eps * rho_eps);
    const double k = specfun::bessel_k_im(order, rho_eps, q);
    const double kp = specfun::bessel_k_im_deriv(order, rho_eps, q);
    return q_eps * std::cos(q_eps) * k - std::sin(q_eps) * (0.5 * k + rho_eps * kp);
}

// Brent root refinement on a bracketing interval [a, b], f(a) f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b, double fa, double fb,
             double tol_abs) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                            0.5 * tol_abs;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            const double s = fb / fa;
            double p, qd;
            if (a == c) {
                p = 2.0 * xm * s;
                qd = 1.0 - s;
            } else {
                const double qr = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qr * (qr - r) - (b - a) * (r - 1.0));
                qd = (qr - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qd = -qd;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * qd - std::fabs(tol1 * qd), std::fabs(e * qd))) {
                e = d;
                d = p / qd;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (fb * fc > 0.0) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

void require_solvable(const PotentialSpec& spec) {
    spec.validate();
    if (!(spec.rho0_sq > 0.25))
        throw std::domain_error(
            "rho0_sq is below critical strength 1/4: no bound states exist");
}

}  // namespace

double matching_residual(const PotentialSpec& spec, double rho_eps, const QuadratureSpec& q) {
    require_solvable(spec);
    const double rho0 = std::sqrt(spec.rho0_sq);
    if (!(rho_eps > 0.0 && rho_eps < rho0))
        throw std::domain_error("matching_residual: rho_eps must lie in (0, rho0)");
    return residual_unchecked(spec.order(), spec.rho0_sq, rho_eps, q);
}

Spectrum solve_spectrum(const PotentialSpec& spec, int n_states, const SolverConfig& cfg) {
    require_solvable(spec);
    if (n_states < 1) throw std::invalid_argument("solve_spectrum: n_states must be >= 1");
    cfg.validate();

    const auto order = spec.order();
    const double g = order.g();
    const double rho0 = std::sqrt(spec.rho0_sq);
    const auto G = [&](double s) {
        return residual_unchecked(order, spec.rho0_sq, std::exp(s), cfg.quadrature);
    };

    // Scan s = ln(rho_eps) downward; asymptotic root spacing in s is pi/g, so
    // pi/(8g) steps give eight samples per period.
    const double step = kPi / (8.0 * g);
    const double s_floor = 0.5 * std::log(kRhoSqFloor);

    Spectrum out;
    double s_hi = std::log(0.999 * rho0);
    double g_hi = G(s_hi);
    while (static_cast<int>(out.states.size()) < n_states) {
        const double s_lo = s_hi - step;
        if (s_lo < s_floor) {
            out.truncated = true;
            break;
        }
        const double g_lo = G(s_lo);
        if (g_hi == 0.0 || g_lo * g_hi < 0.0) {
            const double s_root = (g_hi == 0.0)
                                      ? s_hi
                                      : brent(G, s_lo, s_hi, g_lo, g_hi, cfg.root_tol);
            const double rho_sq = std::exp(2.0 * s_root);
            if (rho_sq < kRhoSqFloor) {
                out.truncated = true;
                break;
            }
            out.states.push_back(EigenRecord::make(static_cast<int>(out.states.size()) + 1,
                                                   rho_sq, spec.rho0_sq, Method::analytic));
        }
        s_hi = s_lo;
        g_hi = g_lo;
    }
    return out;
}

EigenRecord approx_ground_energy(const PotentialSpec& spec) {
    require_solvable(spec);
    const auto order = spec.order();
    const double g = order.g();
    const double rho0 = std::sqrt(spec.rho0_sq);
    const double phi0 = specfun::arg_gamma(0, order);

    const double tan_rho0 = std::tan(rho0);
    const double t_ratio = tan_rho0 / rho0;
    double theta = std::atan2(g * t_ratio, 1.0 - 0.5 * t_ratio);
    // atan2 drops by pi each time rho0 crosses a pole of tan; restore
    // continuity. The pole count follows the sign of tan itself so the branch
    // stays consistent with the atan2 argument even right at a pole.
    theta += kPi * (std::floor(rho0 / kPi) + (tan_rho0 < 0.0 ? 1.0 : 0.0));
    // Ground-state branch: one period below the principal value, anchored
    // against exact roots at small rho0.
    theta -= kPi;

    const double rho_sq = 4.0 * std::exp((2.0 / g) * (phi0 + theta));
    return EigenRecord::make(1, rho_sq, spec.rho0_sq, Method::asymptotic);
}

EigenRecord approx_ladder(const EigenRecord& e1, int n) {
    if (e1.n != 1) throw std::invalid_argument("approx_ladder: e1 must be a ground-state record");
    if (n < 1) throw std::invalid_argument("approx_ladder: n must be >= 1");
    const double factor = std::exp(-2.0 * kPi * (n - 1) / e1.g);
    const double rho_sq = e1.rho_eps_sq * factor;
    if (rho_sq < kRhoSqFloor)
        throw std::underflow_error("approx_ladder: state below representable floor (rho_eps_sq < 1e-280)");
    return EigenRecord::make(n, rho_sq, e1.rho0_sq(), Method::asymptotic);
}

namespace {

void check_record_matches(const PotentialSpec& spec, const EigenRecord& record) {
    const double rho0_sq = record.rho0_sq();
    if (std::fabs(rho0_sq - spec.rho0_sq) > 1e-12 * std::max(1.0, std::fabs(spec.rho0_sq)))
        throw std::invalid_argument("record does not belong to this potential spec");
}

}  // namespace

double normalization_h(const PotentialSpec& spec, const EigenRecord& record,
                       const QuadratureSpec& q) {
    require_solvable(spec);
    check_record_matches(spec, record);
    if (record.method != Method::analytic)
        throw std::invalid_argument("normalization_h: record must be an analytic eigenvalue");

    const auto order = spec.order();
    const double g = order.g();
    const double q_eps = record.q_eps;
    const double rho = std::sqrt(record.rho_eps_sq);
    const double sin_q = std::sin(q_eps);

    // Inner region: int_0^1 sin^2(q y) dy = 1/2 - sin(2q)/(4q), exactly.
    const double inner = (0.5 - 0.25 * std::sin(2.0 * q_eps) / q_eps) / (sin_q * sin_q);

    // Outer region: int_1^inf y K^2(rho y) dy, via u = ln y in panels narrow
    // enough for the log-periodic oscillation of K.
    const double k0 = specfun::bessel_k_im(order, rho, q);
    const double width = (g > 1.0) ? std::min(0.5, kPi / (4.0 * g)) : 0.5;
    const double u_hard_max = std::log(740.0 / rho);  // integrand underflows beyond
    const auto f = [&](double u) {
        const double k = specfun::bessel_k_im(order, rho * std::exp(u), q);
        return std::exp(2.0 * u) * k * k;
    };
    double outer = 0.0;
    double u = 0.0;
    while (u < u_hard_max) {
        const double u_next = std::min(u + width, u_hard_max);
        outer += integrate(f, u, u_next, q);
        u = u_next;
        // Tail bound from K(z) <= sqrt(pi/(2z)) e^{-z}:
        //   int_Y^inf y K^2(rho y) dy <= pi e^{-2 rho Y} / (4 rho^2).
        const double y = std::exp(u);
        const double tail = kPi * std::exp(-2.0 * rho * y) / (4.0 * rho * rho);
        if (tail < std::max(q.abs_tol, q.rel_tol * outer)) break;
    }
    return inner + outer / (k0 * k0);
}

namespace {

// Flip signs so the first interior antinode (first local maximum of |v|
// above the noise floor) is positive.
void apply_sign_convention(std::vector<double>& v) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::fabs(x));
    if (vmax == 0.0) return;
    const double floor = 1e-9 * vmax;
    std::size_t first_peak = 0;
    bool found = false;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (std::fabs(v[i]) <= floor) continue;
        if (std::fabs(v[i]) >= std::fabs(v[i - 1]) && std::fabs(v[i]) >= std::fabs(v[i + 1])) {
            first_peak = i;
            found = true;
            break;
        }
    }
    if (!found) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (std::fabs(v[i]) == vmax) { first_peak = i; break; }
    }
    if (v[first_peak] < 0.0)
        for (double& x : v) x = -x;
}

}  // namespace

WavefunctionTable analytic_wavefunction(const PotentialSpec& spec, const EigenRecord& record,
                                        std::span<const double> grid, TableKind kind,
                                        const QuadratureSpec& q) {
    require_solvable(spec);
    check_record_matches(spec, record);
    if (record.method != Method::analytic)
        throw std::invalid_argument("analytic_wavefunction: record must come from solve_spectrum");
    if (grid.empty()) throw std::invalid_argument("analytic_wavefunction: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0)) throw std::invalid_argument("analytic_wavefunction: negative grid point");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("analytic_wavefunction: grid must be strictly increasing");
    }

    const auto order = spec.order();
    const double rho = std::sqrt(record.rho_eps_sq);
    const double q_eps = record.q_eps;
    const double sin_q = std::sin(q_eps);
    const double k_eps = specfun::bessel_k_im(order, rho, q);
    const double inv_sqrt_h = 1.0 / std::sqrt(normalization_h(spec, record, q));

    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = grid[i];
        double v;
        if (u == 0.0)
            v = 0.0;
        else if (u < 1.0)
            v = std::sin(q_eps * u) / sin_q;
        else
            v = std::sqrt(u) * specfun::bessel_k_im(order, rho * u, q) / k_eps;
        values[i] = inv_sqrt_h * v;
    }
    apply_sign_convention(values);
    if (kind == TableKind::density)
        for (double& v : values) v *= v;

    WavefunctionTable table;
    table.grid.assign(grid.begin(), grid.end());
    table.values = std::move(values);
    table.n = record.n;
    table.spec = spec;
    table.kind = kind;
    table.method = Method::analytic;
    table.validate();
    return table;
}

double effective_strength_2d(int ell) {
    return static_cast<double>(ell) * static_cast<double>(ell) - 0.25;
}

}  // namespace invsq::analytic
