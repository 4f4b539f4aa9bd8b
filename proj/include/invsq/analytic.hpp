#pragma once

#include <span>

#include "invsq/config.hpp"
#include "invsq/types.hpp"

namespace invsq::analytic {

/// Pole-free residual of the matching condition at x = eps:
///   G(rho_eps) = q_eps cos(q_eps) K_{ig}(rho_eps)
///              - sin(q_eps) [ K_{ig}(rho_eps)/2 + rho_eps K'_{ig}(rho_eps) ],
/// with q_eps = sqrt(rho0^2 - rho_eps^2). Zeros of G are the eigenvalues.
double matching_residual(const PotentialSpec& spec, double rho_eps,
                         const QuadratureSpec& q = {});

/// The n_states deepest bound states (n = 1 deepest), found by scanning
/// ln(rho_eps) downward from ln(0.999 rho0) in steps pi/(8g), bracketing sign
/// changes of the residual and refining to cfg.root_tol relative accuracy.
/// Output depends on rho0_sq only, never on eps. States whose rho_eps_sq
/// would fall below 1e-280 are dropped and the result marked truncated.
Spectrum solve_spectrum(const PotentialSpec& spec, int n_states, const SolverConfig& cfg = {});

/// Closed-form small-rho_eps estimate of the ground state,
///   rho_eps_1^2 = 4 exp{ (2/g) [phi(0) + theta(rho0)] },
/// where theta is the two-argument arctangent of
/// (g tan(rho0)/rho0, 1 - tan(rho0)/(2 rho0)) continued across the poles of
/// tan and anchored on the branch that matches the exact root at small rho0.
EigenRecord approx_ground_energy(const PotentialSpec& spec);

/// Geometric ladder E_n = E_1 exp[-2 pi (n-1)/g] built from a ground-state
/// record. Throws std::underflow_error once the scaled eigenvalue falls below
/// the representable floor.
EigenRecord approx_ladder(const EigenRecord& e1, int n);

/// Normalization integral h_n(rho0): inner sine part in closed form, outer
/// x K^2 tail integrated in log-spaced panels with an exponential tail bound.
double normalization_h(const PotentialSpec& spec, const EigenRecord& record,
                       const QuadratureSpec& q = {});

/// Piecewise bound-state wavefunction sampled on a grid of x/eps, in
/// sqrt(eps)*psi units (or eps|psi|^2 for kind = density). The sign is fixed
/// so the first interior antinode is positive.
WavefunctionTable analytic_wavefunction(const PotentialSpec& spec, const EigenRecord& record,
                                        std::span<const double> grid, TableKind kind,
                                        const QuadratureSpec& q = {});

/// Coefficient of (hbar^2/2m0)/r^2 in the effective radial potential of the
/// two-dimensional reduction: ell^2 - 1/4.
double effective_strength_2d(int ell);

}  // namespace invsq::analytic
