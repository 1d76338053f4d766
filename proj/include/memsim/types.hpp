#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace memsim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or out-of-range configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A state with 1-u <= 0 (or below the quench floor) where a regular
/// evaluation was requested.
class SingularStateError : public Error {
public:
    using Error::Error;
};

/// Mesh lost strict monotonicity (node crossing / tangling).
class MeshError : public Error {
public:
    using Error::Error;
};

class QuadratureError : public Error {
public:
    using Error::Error;
};

class ShootingError : public Error {
public:
    using Error::Error;
};

/// Nonlinear or linear solver breakdown inside the time integrator.
class SolverError : public Error {
public:
    using Error::Error;
};

class AnalysisError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

enum class Geometry {
    Interval,  ///< (0,1), u = 0 at both ends
    Ball       ///< unit ball, radial coordinate, u_r(0) = 0, u(1) = 0
};

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

/// Initial membrane deflection u0.
struct InitialData {
    enum class Kind { Zero, Bump, Table };

    Kind kind = Kind::Zero;
    double amplitude = 0.0;          // bump only, in [0,1)
    std::vector<double> values;      // table only, one per node

    static InitialData zero() { return {}; }
    static InitialData bump(double a) { return {Kind::Bump, a, {}}; }
    static InitialData table(std::vector<double> v) {
        return {Kind::Table, 0.0, std::move(v)};
    }
};

/// Full description of one simulation.
struct ProblemSpec {
    double lambda = 10.0;                 // voltage parameter, >= 0
    double alpha = 1.0;                   // capacitance ratio, >= 0
    int dim = 1;                          // N
    Geometry geometry = Geometry::Interval;
    InitialData initial_data = InitialData::zero();
    int mesh_size = 141;                  // cells; nodes = mesh_size + 1
    double mmpde_epsilon = 1e-2;          // +inf freezes the mesh
    int monitor_smoothing_passes = 2;
    double quench_threshold = 1e-4;       // v_stop: halt when 1 - max u < this
    double steady_detect_tol = 1e-7;      // max-norm du/dt threshold
    double t_max = 50.0;

    void validate() const;                // throws ConfigError

    bool mesh_frozen() const {
        return !(mmpde_epsilon < std::numeric_limits<double>::infinity());
    }

    /// |Omega| entering the nonlocal coefficient: 1 on the interval,
    /// omega_N for the unit ball.
    double weighted_measure() const;
};

/// Uniform computational grid xi_i = i/M mapped to physical nodes X_i.
struct MeshState {
    int cells = 0;
    std::vector<double> x;  // size cells+1, strictly increasing, x0=0, xM=1

    double dxi() const { return 1.0 / static_cast<double>(cells); }
    bool strictly_monotone() const;

    static MeshState uniform(int cells);
};

/// One trajectory snapshot.
struct SolutionState {
    double tau = 0.0;  // computational time
    double t = 0.0;    // physical time
    MeshState mesh;
    std::vector<double> u;  // nodal values, size cells+1

    double max_u() const;
    /// Smallest gap 1 - u over the nodes.
    double min_gap() const { return 1.0 - max_u(); }
};

/// Nonlocal closure: I = integral of (1-u)^{-1}, k = (1+alpha I)^{-2},
/// f = lambda k.
struct NonlocalCoefficients {
    double integral_I = 0.0;
    double k = 0.0;
    double f = 0.0;
};

}  // namespace memsim
