#pragma once

#include <span>
#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// Centered-difference metric x_xi at every node (one-sided at the ends).
/// Throws MeshError if the mesh is not strictly increasing or any metric
/// value is non-positive.
std::vector<double> metric_term(const MeshState& mesh);

/// Integral of a nodal function over the physical domain, computed in the
/// computational coordinate: int v(x(xi)) w(x) x_xi dxi by composite Simpson
/// on the uniform xi grid (Simpson 3/8 closes the last three cells when the
/// cell count is odd).
///
/// radial_dim = 0 integrates with unit weight; radial_dim = N >= 1 applies
/// the ball weight N omega_N r^{N-1}.
double integrate(std::span<const double> values, const MeshState& mesh,
                 int radial_dim = 0);

}  // namespace memsim
