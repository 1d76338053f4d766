#pragma once

#include <span>
#include <string>
#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// Parameters of the steady-state problem (time-independent subset of
/// ProblemSpec plus the output-grid resolution).
struct SteadyProblem {
    Geometry geometry = Geometry::Interval;
    int dim = 1;
    double alpha = 1.0;
    int profile_cells = 256;  // uniform output grid, profile_cells+1 nodes
};

/// One point of the steady branch, parametrized by the core gap
/// delta = 1 - w(0).
struct SteadyBranchPoint {
    double delta = 1.0;
    double mu = 0.0;          // multiplier of the local problem
    double integral_I = 0.0;  // integral of (1-w)^{-1} over the domain
    double lambda = 0.0;      // mu (1 + alpha I)^2
    double sup_w = 0.0;
    std::vector<double> grid;     // uniform output nodes in [0,1]
    std::vector<double> profile;  // w on the output nodes
};

/// Shoots the rescaled initial-value problem
///   w'' + (N-1) s^{-1} w' + (1-w)^{-2} = 0, w(0) = 1-delta, w'(0) = 0
/// outward to its first zero and maps it back to the unit domain.
/// Throws ShootingError when no zero crossing is found.
SteadyBranchPoint shoot_profile(double delta, const SteadyProblem& problem);

/// Traces the branch over a grid of delta values (decreasing). Isolated
/// shooting failures are skipped and recorded in *gaps when provided.
std::vector<SteadyBranchPoint> trace_branch(
    const SteadyProblem& problem, std::span<const double> delta_grid,
    std::vector<std::pair<double, std::string>>* gaps = nullptr);

/// Default grid: 60 logarithmically spaced deltas in [1e-3, 0.999],
/// decreasing.
std::vector<double> default_delta_grid(int n = 60);

struct LambdaStar {
    double lambda = 0.0;
    double delta = 0.0;
    bool fold_bracketed = false;
};

/// Supremum of lambda over the branch, refined by golden-section search in
/// delta around the discrete maximum. fold_bracketed is false when the
/// discrete maximum sits at an end of the grid (monotone branch).
/// Throws ConfigError on an empty branch.
LambdaStar lambda_star(const SteadyProblem& problem,
                       const std::vector<SteadyBranchPoint>& branch);

/// Stable-branch solution at a given lambda: bisects delta between the fold
/// and delta = 1 (the low-deflection side). Throws ShootingError when lambda
/// is not bracketed there.
SteadyBranchPoint steady_profile_at_lambda(
    const SteadyProblem& problem, const std::vector<SteadyBranchPoint>& branch,
    double lambda);

/// Max-norm residual of the steady equation on the output grid (4th-order
/// stencils over the nodes where they fit). Diagnostic for branch points
/// whose profile the uniform grid resolves.
double steady_residual_max(const SteadyBranchPoint& point,
                           const SteadyProblem& problem);

}  // namespace memsim
