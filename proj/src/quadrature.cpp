#include "invsq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace invsq {

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1], positive half.
// Kronrod nodes at even indices contain the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEval {
    double value;
    double error;
    double abs_mass;  // estimate of the integral of |f|
};

PanelEval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::fabs(fc);

    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));

    const double ha = std::fabs(h);
    const double value = resk * h;
    resabs *= ha;
    resasc *= ha;

    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 25.0 * eps * resabs);
    return {value, err, resabs};
}

struct Panel {
    double a, b;
    double value, error, mass;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be >= 0");
    if (max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const QuadratureSpec& q) {
    q.validate();
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate: need at least two breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("integrate: breakpoints must be strictly increasing");

    const double eps = std::numeric_limits<double>::epsilon();
    std::priority_queue<Panel> work;
    double total = 0.0, total_err = 0.0, total_mass = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const PanelEval e = gk15(f, breakpoints[i], breakpoints[i + 1]);
        work.push({breakpoints[i], breakpoints[i + 1], e.value, e.error, e.abs_mass, 0});
        total += e.value;
        total_err += e.error;
        total_mass += e.abs_mass;
    }

    double previous = total;
    // Hard cap on panel count keeps memory bounded even on hostile integrands.
    const std::size_t max_panels = 200000;
    while (true) {
        // Strictly above the sum of per-panel floors (25 eps resabs each), so
        // cancellation-dominated integrals terminate at the roundoff limit.
        const double roundoff_floor = 100.0 * eps * total_mass;
        const double target =
            std::max({q.abs_tol, q.rel_tol * std::fabs(total), roundoff_floor});
        if (total_err <= target) return total;

        Panel worst = work.top();
        if (worst.depth >= q.max_subdivisions || work.size() >= max_panels)
            throw ConvergenceError(
                "integrate: no convergence after " + std::to_string(worst.depth) +
                    " subdivisions (error " + std::to_string(total_err) + ")",
                total, previous);
        work.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        const PanelEval left = gk15(f, worst.a, mid);
        const PanelEval right = gk15(f, mid, worst.b);
        previous = total;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_mass += left.abs_mass + right.abs_mass - worst.mass;
        work.push({worst.a, mid, left.value, left.error, left.abs_mass, worst.depth + 1});
        work.push({mid, worst.b, right.value, right.error, right.abs_mass, worst.depth + 1});
    }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& q) {
    const double bp[2] = {a, b};
    return integrate(f, std::span<const double>(bp, 2), q);
}

}  // namespace invsq
