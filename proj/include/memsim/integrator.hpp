#pragma once

#include <string>
#include <vector>

#include "memsim/types.hpp"

namespace memsim {

/// Knobs of the implicit tau-stepper.
struct StepControl {
    double dtau = 1e-4;       // initial step
    double dtau_min = 1e-13;
    double dtau_max = 10.0;
    double error_tol = 1e-6;  // per-step tolerance in the gap-scaled variables
    double newton_tol = 0.02; // Newton update threshold, in error-budget units
    int newton_max_iters = 12;
    double max_du_per_step = 1e-2;   // absolute cap on per-step change of max u
    double max_gap_fraction = 0.2;   // relative cap: d(max u) <= frac * (1 - max u)

    /// How the dense coupling through k(I) and g(max u) enters the Newton
    /// matrix: low-rank corrections solved by the Sherman-Morrison identity,
    /// or dropped (coefficients lagged one iteration).
    enum class NonlocalJacobian { RankOne, Lagged };
    NonlocalJacobian nonlocal_jacobian = NonlocalJacobian::RankOne;

    void validate() const;
};

/// Assembled view of the coupled implicit system A(tau,y) y' = b(tau,y) in
/// the full-vector convention y = (t, u_0..u_M, X_0..X_M). Boundary rows are
/// algebraic: their mass row is zero and b returns the (negated) constraint.
class DaeSystem {
public:
    DaeSystem(const SolutionState& state, const ProblemSpec& spec);

    int cells() const { return cells_; }
    int size() const { return 2 * (cells_ + 1) + 1; }
    int block_bandwidth() const { return 2; }

    std::vector<double> pack(const SolutionState& state) const;
    SolutionState unpack(const std::vector<double>& y, double tau) const;

    /// A(y) v.
    std::vector<double> mass_apply(const std::vector<double>& y,
                                   const std::vector<double>& v) const;
    /// b(y).
    std::vector<double> rhs(const std::vector<double>& y) const;

    bool row_is_boundary(int row) const;

private:
    int cells_;
    ProblemSpec spec_;
};

DaeSystem assemble(const SolutionState& state, const ProblemSpec& spec);

struct StepResult {
    SolutionState state;     // meaningful only when accepted
    bool accepted = false;
    double dtau_used = 0.0;
    double dtau_next = 0.0;
    double error = 0.0;      // weighted step-doubling estimate
    int newton_iters = 0;
    std::string note;        // rejection reason
};

/// One attempted implicit step of length control.dtau: backward difference
/// in tau, damped Newton with banded solves, accepted when the step-doubling
/// error estimate passes. On rejection dtau_next carries the halved step.
StepResult step(const SolutionState& state, const ProblemSpec& spec,
                const StepControl& control);

enum class Outcome { Quench, Steady, TimeLimit, Failure };

std::string to_string(Outcome o);

/// One row of the time-series log (per accepted step).
struct SeriesSample {
    double t = 0, tau = 0, max_u = 0, g = 0, I = 0, k = 0, E = 0, dtau = 0;
};

struct Trajectory {
    std::vector<SolutionState> frames;
    std::vector<SeriesSample> series;
    Outcome outcome = Outcome::Failure;
    std::string message;
    long steps_accepted = 0;
    long steps_rejected = 0;
};

/// Advances from the spec's initial data until quench (1 - max u below the
/// quench threshold), a detected steady state, or t > t_max. Frames are
/// sampled on max-u increments and geometrically in 1 - max u near quench.
/// Hard solver failures return Outcome::Failure with the last good frame.
Trajectory run(const ProblemSpec& spec, StepControl control = {});

}  // namespace memsim
