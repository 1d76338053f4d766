#pragma once

#include <span>
#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// Monitor field M_i = (1-u_i)^{-2} followed by the configured number of
/// 3-point smoothing passes (M_{i-1} + 2 M_i + M_{i+1})/4 with copied end
/// values.
std::vector<double> monitor(const SolutionState& state, const ProblemSpec& spec);
std::vector<double> monitor_values(std::span<const double> u, int smoothing_passes);

/// Sundman factor g = 1/||M(u)||_inf = (1 - max u)^2, from the unsmoothed
/// monitor.
double g_of_state(const SolutionState& state);
double g_of_values(std::span<const double> u);

/// Interior residual contributions eps^{-1} g delta_xi(M delta_xi x) of the
/// moving-mesh equation, averaged-coefficient stencil. Entries 0 and M are
/// zero (boundary nodes are pinned). Throws MeshError on node crossing.
std::vector<double> mmpde_operator(const std::vector<double>& x,
                                   const std::vector<double>& mon,
                                   double g, double epsilon);

}  // namespace memsim
