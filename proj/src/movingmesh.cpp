#include "memsim/movingmesh.hpp"

#include <algorithm>
#include <cmath>

namespace memsim {

std::vector<double> monitor_values(std::span<const double> u, int smoothing_passes) {
    const std::size_t n = u.size();
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double gap = 1.0 - u[i];
        if (!(gap > 0.0))
            throw SingularStateError("monitor: 1-u <= 0 at a node");
        m[i] = 1.0 / (gap * gap);
    }
    std::vector<double> tmp(n);
    for (int pass = 0; pass < smoothing_passes; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            const double left = i == 0 ? m[0] : m[i - 1];
            const double right = i + 1 == n ? m[n - 1] : m[i + 1];
            tmp[i] = 0.25 * (left + 2.0 * m[i] + right);
        }
        m.swap(tmp);
    }
    return m;
}

std::vector<double> monitor(const SolutionState& state, const ProblemSpec& spec) {
    return monitor_values(state.u, spec.monitor_smoothing_passes);
}

double g_of_values(std::span<const double> u) {
    const double gap = 1.0 - *std::max_element(u.begin(), u.end());
    return gap * gap;
}

double g_of_state(const SolutionState& state) {
    return g_of_values(state.u);
}

std::vector<double> mmpde_operator(const std::vector<double>& x,
                                   const std::vector<double>& mon,
                                   double g, double epsilon) {
    const std::size_t n = x.size();
    if (mon.size() != n || n < 3)
        throw MeshError("mmpde_operator: inconsistent input sizes");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x[i] < x[i + 1]))
            throw MeshError("mmpde_operator: mesh tangling (X_{i+1} <= X_i)");

    const double dxi = 1.0 / static_cast<double>(n - 1);
    const double scale =
        std::isinf(epsilon) ? 0.0 : g / epsilon;
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double flux_r = 0.5 * (mon[i + 1] + mon[i]) * (x[i + 1] - x[i]) / dxi;
        const double flux_l = 0.5 * (mon[i] + mon[i - 1]) * (x[i] - x[i - 1]) / dxi;
        out[i] = scale * (flux_r - flux_l) / dxi;
    }
    return out;
}

}  // namespace memsim
