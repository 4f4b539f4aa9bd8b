#include "invsq/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "invsq/config.hpp"

namespace invsq {

void PotentialSpec::validate() const {
    if (!std::isfinite(rho0_sq)) throw std::invalid_argument("PotentialSpec: rho0_sq must be finite");
    if (!(eps_over_a > 0.0 && eps_over_a < 1.0))
        throw std::invalid_argument("PotentialSpec: eps_over_a must lie in (0, 1)");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::analytic: return "analytic";
        case Method::matrix: return "matrix";
        case Method::asymptotic: return "asymptotic";
    }
    return "?";
}

const char* to_string(TableKind k) {
    return k == TableKind::amplitude ? "amplitude" : "density";
}

EigenRecord EigenRecord::make(int n, double rho_eps_sq, double rho0_sq, Method method) {
    if (n < 1) throw std::invalid_argument("EigenRecord: n must be >= 1");
    if (!(rho_eps_sq > 0.0 && rho_eps_sq < rho0_sq))
        throw std::domain_error("EigenRecord: rho_eps_sq must lie in (0, rho0_sq)");
    EigenRecord r;
    r.n = n;
    r.rho_eps_sq = rho_eps_sq;
    r.q_eps = std::sqrt(rho0_sq - rho_eps_sq);
    r.g = std::sqrt(rho0_sq - 0.25);
    r.method = method;
    return r;
}

double EigenRecord::energy_e0(double eps_over_a) const {
    return units::energy_e0_from_rho_eps_sq(rho_eps_sq, eps_over_a);
}

void WavefunctionTable::validate() const {
    if (grid.size() != values.size() || grid.empty())
        throw std::invalid_argument("WavefunctionTable: grid/values size mismatch or empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw std::invalid_argument("WavefunctionTable: non-finite value");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("WavefunctionTable: grid must be strictly increasing");
    }
    if (kind == TableKind::density) {
        double captured = 0.0;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            if (values[i] < 0.0) throw std::invalid_argument("WavefunctionTable: negative density");
            captured += 0.5 * (values[i] + values[i + 1]) * (grid[i + 1] - grid[i]);
        }
        if (!(captured <= 1.0 + 1e-6))
            throw std::invalid_argument(
                "WavefunctionTable: trapezoid of the density exceeds unit probability; "
                "the grid is too coarse to resolve the density");
    }
}

namespace units {

double rho_eps_sq_from_energy_e0(double e_over_e0, double eps_over_a) {
    const double pi = std::numbers::pi;
    return -e_over_e0 * pi * pi * eps_over_a * eps_over_a;
}

double energy_e0_from_rho_eps_sq(double rho_eps_sq, double eps_over_a) {
    const double pi = std::numbers::pi;
    return -rho_eps_sq / (pi * pi * eps_over_a * eps_over_a);
}

double energy_alpha_eps2(double rho_eps_sq, double rho0_sq) { return -rho_eps_sq / rho0_sq; }

}  // namespace units

void SolverConfig::validate() const {
    quadrature.validate();
    if (!(root_tol > 0.0)) throw std::invalid_argument("SolverConfig: root_tol must be > 0");
    if (n_max < 2) throw std::invalid_argument("SolverConfig: n_max must be >= 2");
    if (!(eps_over_a > 0.0 && eps_over_a < 1.0))
        throw std::invalid_argument("SolverConfig: eps_over_a must lie in (0, 1)");
    if (n_states < 1) throw std::invalid_argument("SolverConfig: n_states must be >= 1");
    if (grid_points < 2) throw std::invalid_argument("SolverConfig: grid_points must be >= 2");
    if (!(grid_max_x_over_eps > 0.0))
        throw std::invalid_argument("SolverConfig: grid_max_x_over_eps must be > 0");
}

}  // namespace invsq
