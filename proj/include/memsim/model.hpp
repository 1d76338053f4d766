#pragma once

#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// Volume of the unit ball in N dimensions, pi^{N/2} / Gamma(N/2 + 1).
double volume_unit_ball(int n);

/// Uniform mesh plus nodal u0 from the initial-data descriptor; t = tau = 0.
/// Rejects data outside [0,1), data violating the boundary conditions, and
/// (ball geometry) data increasing in r.
SolutionState initial_state(const ProblemSpec& spec);

/// Evaluates I, k and f for the given state. Throws SingularStateError if
/// any nodal gap 1-u is non-positive.
NonlocalCoefficients nonlocal_coefficients(const SolutionState& state,
                                           const ProblemSpec& spec);

/// Nodal reaction term F_i = f (1-u_i)^{-2}. Requires every gap to be above
/// half the quench threshold; integration halts before that point.
std::vector<double> reaction_term(const SolutionState& state,
                                  const NonlocalCoefficients& coeffs,
                                  const ProblemSpec& spec);

}  // namespace memsim
