#pragma once

#include "invsq/quadrature.hpp"

namespace invsq {

enum class OutputFormat { csv, json };

/// Single source of every numeric knob used by the solvers and the CLI.
struct SolverConfig {
    double root_tol = 1e-12;
    QuadratureSpec quadrature{};
    int n_max = 400;
    double eps_over_a = 0.001;
    double rho0_sq = 50.0;
    int n_states = 4;
    int grid_points = 2000;
    double grid_max_x_over_eps = 10.0;
    OutputFormat output_format = OutputFormat::csv;

    void validate() const;
};

}  // namespace invsq
