#pragma once

#include <string>
#include <vector>

#include "invsq/specfun.hpp"

namespace invsq {

/// Dimensionless description of the truncated potential: strength
/// rho0^2 = 2 m0 alpha / hbar^2 and cutoff ratio eps/a. Bound-state solvers
/// additionally require rho0_sq > 1/4, enforced at their entry points.
struct PotentialSpec {
    double rho0_sq = 50.0;
    double eps_over_a = 0.001;

    void validate() const;
    specfun::ImagOrder order() const { return specfun::ImagOrder::from_rho0_sq(rho0_sq); }
};

enum class Method { analytic, matrix, asymptotic };
enum class TableKind { amplitude, density };

const char* to_string(Method m);
const char* to_string(TableKind k);

/// One bound state in dimensionless form. rho_eps_sq = -E rho0^2 eps^2/alpha
/// is the figure-of-merit eigenvalue; q_eps = sqrt(rho0^2 - rho_eps^2) is the
/// inner wavenumber.
struct EigenRecord {
    int n = 0;
    double rho_eps_sq = 0.0;
    double q_eps = 0.0;
    double g = 0.0;
    Method method = Method::analytic;

    static EigenRecord make(int n, double rho_eps_sq, double rho0_sq, Method method);

    double rho0_sq() const { return g * g + 0.25; }
    /// E in units of alpha/eps^2 (always negative for a bound state).
    double energy_alpha_eps2() const { return -rho_eps_sq / rho0_sq(); }
    /// E in units of E0 = hbar^2 pi^2 / (2 m0 a^2) for a given cutoff ratio.
    double energy_e0(double eps_over_a) const;
};

struct Spectrum {
    std::vector<EigenRecord> states;
    bool truncated = false;  // deeper states fell below the representable floor
};

/// Sampled wavefunction data in cutoff-scaled units: grid holds x/eps, values
/// hold sqrt(eps)*psi (amplitude) or eps*|psi|^2 (density).
struct WavefunctionTable {
    std::vector<double> grid;
    std::vector<double> values;
    int n = 0;
    PotentialSpec spec;
    TableKind kind = TableKind::amplitude;
    Method method = Method::analytic;

    void validate() const;
};

namespace units {

/// rho_eps^2 from E/E0:   rho_eps^2 = -(E/E0) pi^2 (eps/a)^2.
double rho_eps_sq_from_energy_e0(double e_over_e0, double eps_over_a);
/// E/E0 from rho_eps^2 (inverse of the above).
double energy_e0_from_rho_eps_sq(double rho_eps_sq, double eps_over_a);
/// E/(alpha/eps^2) = -rho_eps^2 / rho0^2.
double energy_alpha_eps2(double rho_eps_sq, double rho0_sq);

}  // namespace units

}  // namespace invsq
