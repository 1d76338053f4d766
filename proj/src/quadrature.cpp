#include "memsim/quadrature.hpp"

#include <cmath>

#include "memsim/model.hpp"

namespace memsim {

std::vector<double> metric_term(const MeshState& mesh) {
    const int n = mesh.cells;
    if (n < 1 || static_cast<int>(mesh.x.size()) != n + 1)
        throw MeshError("metric_term: malformed mesh");
    if (!mesh.strictly_monotone())
        throw MeshError("metric_term: mesh is not strictly increasing");
    const double dxi = mesh.dxi();
    std::vector<double> m(n + 1);
    m[0] = (mesh.x[1] - mesh.x[0]) / dxi;
    m[n] = (mesh.x[n] - mesh.x[n - 1]) / dxi;
    for (int i = 1; i < n; ++i)
        m[i] = (mesh.x[i + 1] - mesh.x[i - 1]) / (2.0 * dxi);
    for (double v : m)
        if (!(v > 0.0)) throw MeshError("metric_term: non-positive metric (tangling)");
    return m;
}

double integrate(std::span<const double> values, const MeshState& mesh,
                 int radial_dim) {
    const int n = mesh.cells;
    if (static_cast<int>(values.size()) != n + 1)
        throw QuadratureError("integrate: value count does not match the mesh");
    if (n < 2)
        throw QuadratureError("integrate: need at least two cells");

    const std::vector<double> xi_metric = metric_term(mesh);
    std::vector<double> f(n + 1);
    double wscale = 1.0;
    if (radial_dim > 0) wscale = radial_dim * volume_unit_ball(radial_dim);
    for (int i = 0; i <= n; ++i) {
        double w = 1.0;
        if (radial_dim > 0)
            w = wscale * std::pow(mesh.x[i], radial_dim - 1);
        f[i] = values[i] * w * xi_metric[i];
    }

    const double dxi = mesh.dxi();
    double sum = 0.0;
    // Composite Simpson needs an even cell count; an odd count is closed by
    // the 3/8 rule over the last three cells.
    int simpson_end = n;
    if (n % 2 != 0) {
        if (n < 3)
            throw QuadratureError("integrate: odd cell count below 3 unsupported");
        simpson_end = n - 3;
    }
    for (int i = 0; i + 2 <= simpson_end; i += 2)
        sum += dxi / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    if (simpson_end != n)
        sum += 3.0 * dxi / 8.0 *
               (f[n - 3] + 3.0 * f[n - 2] + 3.0 * f[n - 1] + f[n]);
    return sum;
}

}  // namespace memsim
