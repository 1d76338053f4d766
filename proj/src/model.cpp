#include "memsim/model.hpp"

#include <algorithm>
#include <cmath>

#include "memsim/quadrature.hpp"

namespace memsim {

std::string to_string(Geometry g) {
    return g == Geometry::Interval ? "interval" : "ball";
}

Geometry geometry_from_string(const std::string& s) {
    if (s == "interval") return Geometry::Interval;
    if (s == "ball") return Geometry::Ball;
    throw ConfigError("unknown geometry '" + s + "' (expected interval|ball)");
}

double volume_unit_ball(int n) {
    if (n < 1) throw ConfigError("volume_unit_ball: dimension must be >= 1");
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double ProblemSpec::weighted_measure() const {
    return geometry == Geometry::Interval ? 1.0 : volume_unit_ball(dim);
}

void ProblemSpec::validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ConfigError("lambda must be a finite non-negative real");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw ConfigError("alpha must be a finite non-negative real");
    if (dim < 1) throw ConfigError("dim must be >= 1");
    if (geometry == Geometry::Interval && dim != 1)
        throw ConfigError("interval geometry requires dim = 1");
    if (mesh_size < 8) throw ConfigError("mesh_size must be >= 8");
    if (!(mmpde_epsilon > 0.0)) throw ConfigError("mmpde_epsilon must be positive");
    if (monitor_smoothing_passes < 0)
        throw ConfigError("monitor_smoothing_passes must be >= 0");
    if (!(quench_threshold > 0.0) || quench_threshold >= 0.5)
        throw ConfigError("quench_threshold must lie in (0, 0.5)");
    if (!(steady_detect_tol > 0.0))
        throw ConfigError("steady_detect_tol must be positive");
    if (!(t_max > 0.0)) throw ConfigError("t_max must be positive");
    if (initial_data.kind == InitialData::Kind::Bump &&
        (initial_data.amplitude < 0.0 || initial_data.amplitude >= 1.0))
        throw ConfigError("bump amplitude must lie in [0, 1)");
}

bool MeshState::strictly_monotone() const {
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1])) return false;
    return true;
}

MeshState MeshState::uniform(int cells) {
    MeshState m;
    m.cells = cells;
    m.x.resize(cells + 1);
    for (int i = 0; i <= cells; ++i)
        m.x[i] = static_cast<double>(i) / static_cast<double>(cells);
    m.x.front() = 0.0;
    m.x.back() = 1.0;
    return m;
}

double SolutionState::max_u() const {
    return *std::max_element(u.begin(), u.end());
}

namespace {

// Symmetric bump profile, max 1 at the domain centre, zero on the Dirichlet
// boundary; radially non-increasing in the ball case.
double bump_shape(Geometry geom, double x) {
    if (geom == Geometry::Interval) {
        const double s = std::sin(M_PI * x);
        return s * s;
    }
    const double c = std::cos(0.5 * M_PI * x);
    return c * c;
}

}  // namespace

SolutionState initial_state(const ProblemSpec& spec) {
    spec.validate();
    SolutionState state;
    state.mesh = MeshState::uniform(spec.mesh_size);
    const int n = spec.mesh_size;
    state.u.assign(n + 1, 0.0);

    switch (spec.initial_data.kind) {
        case InitialData::Kind::Zero:
            break;
        case InitialData::Kind::Bump:
            for (int i = 0; i <= n; ++i)
                state.u[i] = spec.initial_data.amplitude *
                             bump_shape(spec.geometry, state.mesh.x[i]);
            break;
        case InitialData::Kind::Table: {
            if (static_cast<int>(spec.initial_data.values.size()) != n + 1)
                throw ConfigError("tabulated initial data must supply mesh_size+1 values");
            state.u = spec.initial_data.values;
            break;
        }
    }

    for (double v : state.u)
        if (!(v >= 0.0) || !(v < 1.0) || !std::isfinite(v))
            throw ConfigError("initial data must satisfy 0 <= u0 < 1");
    if (spec.geometry == Geometry::Interval) {
        if (state.u.front() != 0.0 || state.u.back() != 0.0)
            throw ConfigError("initial data must vanish on the boundary");
    } else {
        if (state.u.back() != 0.0)
            throw ConfigError("initial data must vanish at r = 1");
        for (int i = 0; i < n; ++i)
            if (state.u[i + 1] > state.u[i] + 1e-14)
                throw ConfigError("radial initial data must be non-increasing in r");
    }
    return state;
}

NonlocalCoefficients nonlocal_coefficients(const SolutionState& state,
                                           const ProblemSpec& spec) {
    std::vector<double> theta(state.u.size());
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        const double gap = 1.0 - state.u[i];
        if (!(gap > 0.0))
            throw SingularStateError("nonlocal integrand singular: 1-u <= 0 at a node");
        theta[i] = 1.0 / gap;
    }
    const int weight = spec.geometry == Geometry::Ball ? spec.dim : 0;
    NonlocalCoefficients c;
    c.integral_I = integrate(theta, state.mesh, weight);
    const double h = 1.0 + spec.alpha * c.integral_I;
    c.k = 1.0 / (h * h);
    c.f = spec.lambda * c.k;
    return c;
}

std::vector<double> reaction_term(const SolutionState& state,
                                  const NonlocalCoefficients& coeffs,
                                  const ProblemSpec& spec) {
    std::vector<double> F(state.u.size());
    const double floor = 0.5 * spec.quench_threshold;
    for (std::size_t i = 0; i < state.u.size(); ++i) {
        const double gap = 1.0 - state.u[i];
        if (gap <= floor)
            throw SingularStateError(
                "reaction term evaluated past the quench floor (1-u <= v_stop/2)");
        F[i] = coeffs.f / (gap * gap);
    }
    return F;
}

}  // namespace memsim
