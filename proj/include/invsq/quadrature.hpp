#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace invsq {

/// Tolerances and work limits for the adaptive integrators.
struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_subdivisions = 60;  // bisection depth limit per panel

    void validate() const;
};

/// Thrown when an adaptive integral fails to meet its tolerance before the
/// subdivision limit. Carries the two most recent global estimates so the
/// caller can judge how far apart they are.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}

    double last_estimate;
    double previous_estimate;
};

/// Globally adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& q = {});

/// Same integrator, with the initial panels given by consecutive breakpoints
/// (strictly increasing, at least two). Useful when the caller knows the
/// oscillation scale of the integrand.
double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const QuadratureSpec& q = {});

}  // namespace invsq
