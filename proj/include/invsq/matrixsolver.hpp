#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "invsq/types.hpp"

namespace invsq::matrixsolver {

/// Thrown when diagonalization fails or its post-hoc quality checks
/// (orthonormality, eigen-residuals) are violated.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BasisConfig {
    int n_max = 400;
    PotentialSpec spec;

    void validate() const;
};

/// Dense symmetric Hamiltonian in units of E0 = hbar^2 pi^2/(2 m0 a^2),
/// assembled in the sine basis of the embedding infinite well.
struct HamiltonianMatrix {
    int dim = 0;
    Eigen::MatrixXd entries;
    BasisConfig config;
};

/// Lowest eigenpairs of the Hamiltonian: energies ascending in units of E0,
/// one orthonormal coefficient column per state.
struct EigenSolution {
    std::vector<double> energies;
    Eigen::MatrixXd vectors;
    BasisConfig config;
};

/// h_nm = n^2 d_nm - (rho0^2/pi^2) { (a/eps) [ d_nm + (1-d_nm) Sinc((n-m) pi eps/a)
///        - Sinc((n+m) pi eps/a) ] + L2(n+m, eps/a) - L2(n-m, eps/a) }.
/// Sinc and L2 values are cached over the O(N) distinct index sums and
/// differences before the O(N^2) fill.
HamiltonianMatrix assemble(const BasisConfig& config);

/// Dense symmetric eigensolve, keeping the k_lowest smallest eigenpairs.
/// Orthonormality and eigen-residual are verified post hoc.
EigenSolution diagonalize(const HamiltonianMatrix& h, int k_lowest);

/// Bound states: eigenvalues with E/E0 < 0 converted to rho_eps^2, numbered
/// by ascending energy. May be empty.
std::vector<EigenRecord> bound_states(const EigenSolution& sol);

/// psi(x) = sum_m c_m sqrt(2/a) sin(m pi x/a) on a grid of x/a points,
/// rescaled to the x/eps, sqrt(eps) psi table convention. state is 1-based.
WavefunctionTable reconstruct_wavefunction(const EigenSolution& sol, int state,
                                           std::span<const double> grid_x_over_a,
                                           TableKind kind = TableKind::amplitude);

/// Strict sign changes between consecutive samples, ignoring samples below
/// 1e-9 of the peak amplitude. Amplitude tables only.
int count_nodes(const WavefunctionTable& table);

/// True when the state has appreciable amplitude (> 1e-3 of its peak) on the
/// last 1% of the well, i.e. the embedding wall is contaminating it.
bool wall_affected(const EigenSolution& sol, int state);

}  // namespace invsq::matrixsolver
