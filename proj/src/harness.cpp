#include "invsq/harness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace invsq::harness {

namespace {

double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

SolverConfig echo_config(const PotentialSpec& spec, int n_states, int n_max,
                         const SolverConfig& cfg) {
    SolverConfig echo = cfg;
    echo.rho0_sq = spec.rho0_sq;
    echo.eps_over_a = spec.eps_over_a;
    echo.n_states = n_states;
    echo.n_max = n_max;
    return echo;
}

}  // namespace

ComparisonReport compare_spectra(const PotentialSpec& spec, int n_states, int n_max,
                                 const SolverConfig& cfg) {
    try {
        const Spectrum analytic = analytic::solve_spectrum(spec, n_states, cfg);

        matrixsolver::BasisConfig basis{n_max, spec};
        const auto h = matrixsolver::assemble(basis);
        const int k = std::min(n_max, n_states + 8);
        const auto sol = matrixsolver::diagonalize(h, k);
        const auto bound = matrixsolver::bound_states(sol);

        ComparisonReport report;
        report.spec = spec;
        report.config = echo_config(spec, n_states, n_max, cfg);
        const std::size_t pairs =
            std::min({analytic.states.size(), bound.size(), static_cast<std::size_t>(n_states)});
        for (std::size_t i = 0; i < pairs; ++i) {
            SpectrumPair p;
            p.n = static_cast<int>(i) + 1;
            p.rho_eps_sq_analytic = analytic.states[i].rho_eps_sq;
            p.rho_eps_sq_matrix = bound[i].rho_eps_sq;
            p.rel_diff = rel_diff(p.rho_eps_sq_analytic, p.rho_eps_sq_matrix);
            p.wall_affected = matrixsolver::wall_affected(sol, p.n);
            report.pairs.push_back(p);
        }
        return report;
    } catch (const std::exception& e) {
        std::ostringstream msg;
        msg << "compare_spectra(rho0_sq=" << spec.rho0_sq << ", eps_over_a=" << spec.eps_over_a
            << ", n_max=" << n_max << "): " << e.what();
        throw std::runtime_error(msg.str());
    }
}

CollapseReport collapse_metric(const PotentialSpec& spec_base, std::span<const double> epsilon_list,
                               std::span<const double> grid, int n_max, const SolverConfig& cfg) {
    if (epsilon_list.size() < 2)
        throw std::invalid_argument("collapse_metric: need at least two epsilon values");
    if (grid.empty()) throw std::invalid_argument("collapse_metric: empty grid");

    CollapseReport report;
    report.spec = spec_base;
    report.epsilon_list.assign(epsilon_list.begin(), epsilon_list.end());
    report.grid.assign(grid.begin(), grid.end());
    report.config = echo_config(spec_base, 1, n_max, cfg);

    // Analytic reference curve and its peak, which normalizes all deviations.
    const Spectrum spectrum = analytic::solve_spectrum(spec_base, 1, cfg);
    if (spectrum.states.empty())
        throw std::runtime_error("collapse_metric: no analytic ground state found");
    const auto analytic_table = analytic::analytic_wavefunction(
        spec_base, spectrum.states.front(), grid, TableKind::density, cfg.quadrature);
    report.analytic_curve = analytic_table.values;
    double peak = 0.0;
    for (double v : report.analytic_curve) peak = std::max(peak, v);
    if (peak == 0.0) throw std::runtime_error("collapse_metric: analytic density peak is zero");

    for (double eps : epsilon_list) {
        PotentialSpec spec = spec_base;
        spec.eps_over_a = eps;
        std::vector<double> grid_x_over_a(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid_x_over_a[i] = grid[i] * eps;
            if (grid_x_over_a[i] > 1.0)
                throw std::invalid_argument(
                    "collapse_metric: grid extends beyond the well for eps_over_a=" +
                    std::to_string(eps));
        }

        matrixsolver::BasisConfig basis{n_max, spec};
        const auto sol = matrixsolver::diagonalize(matrixsolver::assemble(basis),
                                                   std::min(n_max, 8));
        if (matrixsolver::bound_states(sol).empty())
            throw std::runtime_error("collapse_metric: no matrix bound state at eps_over_a=" +
                                     std::to_string(eps));
        if (matrixsolver::wall_affected(sol, 1)) {
            std::ostringstream msg;
            msg << "collapse_metric: ground state is wall-contaminated at eps_over_a=" << eps
                << "; use a smaller eps_over_a or a larger n_max";
            throw std::runtime_error(msg.str());
        }
        const auto table =
            matrixsolver::reconstruct_wavefunction(sol, 1, grid_x_over_a, TableKind::density);
        report.curves.push_back(table.values);
    }

    for (std::size_t i = 0; i < report.curves.size(); ++i)
        for (std::size_t j = i + 1; j < report.curves.size(); ++j)
            for (std::size_t k = 0; k < grid.size(); ++k)
                report.max_pairwise_dev =
                    std::max(report.max_pairwise_dev,
                             std::fabs(report.curves[i][k] - report.curves[j][k]) / peak);
    for (const auto& curve : report.curves)
        for (std::size_t k = 0; k < grid.size(); ++k)
            report.max_dev_vs_analytic =
                std::max(report.max_dev_vs_analytic,
                         std::fabs(curve[k] - report.analytic_curve[k]) / peak);
    return report;
}

LadderReport ladder_check(const PotentialSpec& spec, int n_from, int n_to,
                          const SolverConfig& cfg) {
    if (n_from < 1 || n_to <= n_from)
        throw std::invalid_argument("ladder_check: need n_to > n_from >= 1");

    const Spectrum spectrum = analytic::solve_spectrum(spec, n_to, cfg);
    const double g = std::sqrt(spec.rho0_sq - 0.25);
    const double asym = std::exp(-2.0 * std::numbers::pi / g);

    LadderReport report;
    report.truncated = spectrum.truncated;
    const int available = static_cast<int>(spectrum.states.size());
    for (int n = n_from; n < n_to && n + 1 <= available; ++n) {
        LadderRow row;
        row.n = n;
        row.ratio = spectrum.states[n].rho_eps_sq / spectrum.states[n - 1].rho_eps_sq;
        row.asymptotic_ratio = asym;
        row.deviation = std::fabs(row.ratio - asym) / asym;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace invsq::harness
