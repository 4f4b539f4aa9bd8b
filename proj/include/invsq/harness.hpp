#pragma once

#include <span>
#include <vector>

#include "invsq/analytic.hpp"
#include "invsq/config.hpp"
#include "invsq/matrixsolver.hpp"

namespace invsq::harness {

struct SpectrumPair {
    int n = 0;
    double rho_eps_sq_analytic = 0.0;
    double rho_eps_sq_matrix = 0.0;
    double rel_diff = 0.0;  // |a-b| / max(|a|,|b|)
    bool wall_affected = false;
};

/// Side-by-side analytic and matrix spectra for one potential. Wall-affected
/// pairs are flagged and must be excluded from pass/fail aggregates.
struct ComparisonReport {
    PotentialSpec spec;
    std::vector<SpectrumPair> pairs;
    SolverConfig config;  // full echo of the knobs used
};

ComparisonReport compare_spectra(const PotentialSpec& spec, int n_states, int n_max,
                                 const SolverConfig& cfg = {});

/// Ground-state density curves eps |psi_1|^2 on a common x/eps grid for a set
/// of cutoffs, against the analytic curve. Deviations are sup-norm, scaled by
/// the analytic peak.
struct CollapseReport {
    PotentialSpec spec;
    std::vector<double> epsilon_list;
    std::vector<double> grid;
    std::vector<std::vector<double>> curves;
    std::vector<double> analytic_curve;
    double max_pairwise_dev = 0.0;
    double max_dev_vs_analytic = 0.0;
    SolverConfig config;
};

CollapseReport collapse_metric(const PotentialSpec& spec_base, std::span<const double> epsilon_list,
                               std::span<const double> grid, int n_max,
                               const SolverConfig& cfg = {});

struct LadderRow {
    int n = 0;
    double ratio = 0.0;             // rho_eps_sq(n+1) / rho_eps_sq(n)
    double asymptotic_ratio = 0.0;  // exp(-2 pi / g)
    double deviation = 0.0;         // |ratio - asymptotic| / asymptotic
};

struct LadderReport {
    std::vector<LadderRow> rows;
    bool truncated = false;
};

/// Successive eigenvalue ratios from the analytic spectrum against the
/// geometric-ladder prediction. Underflow truncation is propagated.
LadderReport ladder_check(const PotentialSpec& spec, int n_from, int n_to,
                          const SolverConfig& cfg = {});

}  // namespace invsq::harness
