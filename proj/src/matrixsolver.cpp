#include "invsq/matrixsolver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace invsq::matrixsolver {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> reconstruct_on(const EigenSolution& sol, int state,
                                   std::span<const double> grid_x_over_a) {
    const Eigen::VectorXd c = sol.vectors.col(state - 1);
    const int n_max = static_cast<int>(c.size());
    std::vector<double> psi(grid_x_over_a.size());
    const double sqrt2 = std::numbers::sqrt2;
    for (std::size_t i = 0; i < grid_x_over_a.size(); ++i) {
        const double x = grid_x_over_a[i];
        double s = 0.0;
        for (int m = 1; m <= n_max; ++m) s += c(m - 1) * std::sin(m * kPi * x);
        psi[i] = sqrt2 * s;
    }
    return psi;
}

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

void BasisConfig::validate() const {
    if (n_max < 2) throw std::invalid_argument("BasisConfig: n_max must be >= 2");
    spec.validate();
}

HamiltonianMatrix assemble(const BasisConfig& config) {
    config.validate();
    const int n_max = config.n_max;
    const double eps = config.spec.eps_over_a;
    const double pref = config.spec.rho0_sq / (kPi * kPi);
    const double a_over_eps = 1.0 / eps;

    // Entries depend on n+m and |n-m| only (apart from the Kronecker terms).
    std::vector<double> sinc_t(2 * n_max + 1), l2_t(2 * n_max + 1);
    for (int k = 0; k <= 2 * n_max; ++k) {
        sinc_t[k] = specfun::sinc(k * kPi * eps);
        l2_t[k] = specfun::l2_integral(k, eps);
    }

    HamiltonianMatrix h;
    h.dim = n_max;
    h.config = config;
    h.entries.resize(n_max, n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (int m = n; m <= n_max; ++m) {
            const int sp = n + m;
            const int sm = m - n;
            const double bracket =
                a_over_eps * ((n == m ? 1.0 : sinc_t[sm]) - sinc_t[sp]) + l2_t[sp] - l2_t[sm];
            double v = -pref * bracket;
            if (n == m) v += static_cast<double>(n) * static_cast<double>(n);
            h.entries(n - 1, m - 1) = v;
            h.entries(m - 1, n - 1) = v;
        }
    }
    return h;
}

EigenSolution diagonalize(const HamiltonianMatrix& h, int k_lowest) {
    if (k_lowest < 1 || k_lowest > h.dim)
        throw std::invalid_argument("diagonalize: k_lowest out of range");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.entries);
    if (es.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "diagonalize: eigensolver failed (info=" << static_cast<int>(es.info())
            << ", dim=" << h.dim << ")";
        throw SolverError(msg.str());
    }

    EigenSolution sol;
    sol.config = h.config;
    sol.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + k_lowest);
    sol.vectors = es.eigenvectors().leftCols(k_lowest);

    const double scale = std::max(std::fabs(es.eigenvalues()(0)),
                                  std::fabs(es.eigenvalues()(h.dim - 1)));
    const double ortho =
        (sol.vectors.transpose() * sol.vectors - Eigen::MatrixXd::Identity(k_lowest, k_lowest))
            .cwiseAbs()
            .maxCoeff();
    if (ortho >= 1e-8)
        throw SolverError("diagonalize: eigenvector orthonormality violated (" +
                          std::to_string(ortho) + ")");
    for (int j = 0; j < k_lowest; ++j) {
        const double resid =
            (h.entries * sol.vectors.col(j) - sol.energies[j] * sol.vectors.col(j))
                .cwiseAbs()
                .maxCoeff();
        if (resid >= 1e-8 * std::max(scale, 1.0))
            throw SolverError("diagonalize: eigen-residual too large for state " +
                              std::to_string(j + 1));
    }
    return sol;
}

std::vector<EigenRecord> bound_states(const EigenSolution& sol) {
    std::vector<EigenRecord> out;
    for (double e : sol.energies) {
        if (e >= 0.0) break;  // energies ascend; no further bound states
        out.push_back(EigenRecord::make(
            static_cast<int>(out.size()) + 1,
            units::rho_eps_sq_from_energy_e0(e, sol.config.spec.eps_over_a),
            sol.config.spec.rho0_sq, Method::matrix));
    }
    return out;
}

WavefunctionTable reconstruct_wavefunction(const EigenSolution& sol, int state,
                                           std::span<const double> grid_x_over_a,
                                           TableKind kind) {
    if (state < 1 || state > static_cast<int>(sol.energies.size()))
        throw std::invalid_argument("reconstruct_wavefunction: state out of range");
    if (grid_x_over_a.empty())
        throw std::invalid_argument("reconstruct_wavefunction: empty grid");
    for (std::size_t i = 0; i < grid_x_over_a.size(); ++i) {
        if (!(grid_x_over_a[i] >= 0.0 && grid_x_over_a[i] <= 1.0))
            throw std::invalid_argument("reconstruct_wavefunction: grid must lie in [0, 1]");
        if (i > 0 && !(grid_x_over_a[i] > grid_x_over_a[i - 1]))
            throw std::invalid_argument("reconstruct_wavefunction: grid must be strictly increasing");
    }

    const double eps = sol.config.spec.eps_over_a;
    std::vector<double> psi = reconstruct_on(sol, state, grid_x_over_a);
    apply_sign_convention(psi);

    // Convert to the cutoff-scaled table convention: sqrt(eps) psi on x/eps.
    const double amp_scale = std::sqrt(eps);
    WavefunctionTable table;
    table.grid.resize(grid_x_over_a.size());
    table.values.resize(grid_x_over_a.size());
    for (std::size_t i = 0; i < grid_x_over_a.size(); ++i) {
        table.grid[i] = grid_x_over_a[i] / eps;
        const double v = amp_scale * psi[i];
        table.values[i] = (kind == TableKind::density) ? v * v : v;
    }
    table.n = state;
    table.spec = sol.config.spec;
    table.kind = kind;
    table.method = Method::matrix;
    table.validate();
    return table;
}

int count_nodes(const WavefunctionTable& table) {
    if (table.kind != TableKind::amplitude)
        throw std::invalid_argument("count_nodes: amplitude table required");
    double vmax = 0.0;
    for (double v : table.values) vmax = std::max(vmax, std::fabs(v));
    const double floor = 1e-9 * vmax;
    int crossings = 0;
    int prev = 0;
    for (double v : table.values) {
        if (std::fabs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev) ++crossings;
        prev = s;
    }
    return crossings;
}

bool wall_affected(const EigenSolution& sol, int state) {
    if (state < 1 || state > static_cast<int>(sol.energies.size()))
        throw std::invalid_argument("wall_affected: state out of range");
    constexpr int n_grid = 2048;
    std::vector<double> grid(n_grid);
    for (int i = 0; i < n_grid; ++i) grid[i] = static_cast<double>(i + 1) / n_grid;
    const std::vector<double> psi = reconstruct_on(sol, state, grid);
    double vmax = 0.0;
    for (double v : psi) vmax = std::max(vmax, std::fabs(v));
    const int tail_start = n_grid - n_grid / 100;
    for (int i = tail_start; i < n_grid; ++i)
        if (std::fabs(psi[i]) > 1e-3 * vmax) return true;
    return false;
}

}  // namespace invsq::matrixsolver
