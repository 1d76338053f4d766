#include "memsim/steady.hpp"

#include <algorithm>
#include <cmath>

#include "memsim/model.hpp"

namespace memsim {

namespace {

// Gap form of the shooting IVP: v = 1 - w grows from delta to 1,
//   v'' + (N-1) s^{-1} v' = v^{-2}, v(0) = delta, v'(0) = 0.
struct ShotStep {
    double s, v, p;  // p = v'
};

struct Derivs {
    double dv, dp;
};

Derivs rhs(double s, double v, double p, int dim) {
    Derivs d;
    d.dv = p;
    d.dp = 1.0 / (v * v) - (dim - 1) * p / s;
    return d;
}

void rk4(double& s, double& v, double& p, double h, int dim) {
    const Derivs k1 = rhs(s, v, p, dim);
    const Derivs k2 = rhs(s + 0.5 * h, v + 0.5 * h * k1.dv, p + 0.5 * h * k1.dp, dim);
    const Derivs k3 = rhs(s + 0.5 * h, v + 0.5 * h * k2.dv, p + 0.5 * h * k2.dp, dim);
    const Derivs k4 = rhs(s + h, v + h * k3.dv, p + h * k3.dp, dim);
    v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    p += h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
    s += h;
}

// Local step bound: resolve the gap scale v/|v'|, the curvature scale
// sqrt(2) v^{3/2}, and (for N >= 2) the 1/s coefficient on its own budget.
double step_size(double s, double v, double p, int dim) {
    double h = std::sqrt(2.0) * std::pow(v, 1.5);
    if (p > 0.0) h = std::min(h, v / p);
    h *= 5e-3;
    if (dim > 1) h = std::min(h, 0.02 * s);
    return h;
}

struct ShotPath {
    std::vector<ShotStep> steps;  // includes the start of the RK section
    double radius = 0.0;          // s where v = 1
    double p_end = 0.0;
};

ShotPath integrate_to_crossing(double delta, int dim) {
    ShotPath path;
    const double d2 = delta * delta;
    // Series start past the coordinate singularity:
    //   v(s) = delta + s^2/(2 N delta^2) + a4 s^4 + ...
    const double a2 = 1.0 / (2.0 * dim * d2);
    const double a4 = -1.0 / (dim * (8.0 + 4.0 * dim) * std::pow(delta, 5.0));
    const double inner_scale = std::sqrt(2.0 * dim) * std::pow(delta, 1.5);
    double s = 1e-3 * inner_scale;
    double v = delta + a2 * s * s + a4 * std::pow(s, 4.0);
    double p = 2.0 * a2 * s + 4.0 * a4 * std::pow(s, 3.0);
    path.steps.push_back({s, v, p});

    const double s_max = 1e6;
    while (v < 1.0) {
        if (s > s_max)
            throw ShootingError("shoot_profile: no zero crossing before s = 1e6");
        const double h = step_size(s, v, p, dim);
        double sn = s, vn = v, pn = p;
        rk4(sn, vn, pn, h, dim);
        if (vn >= 1.0) {
            // Newton on the step length pins the crossing v(R) = 1.
            double hc = h;
            double sc = sn, vc = vn, pc = pn;
            for (int it = 0; it < 60; ++it) {
                const double dh = -(vc - 1.0) / pc;
                hc += dh;
                sc = s;
                vc = v;
                pc = p;
                rk4(sc, vc, pc, hc, dim);
                if (std::abs(vc - 1.0) < 1e-14) break;
            }
            path.steps.push_back({sc, vc, pc});
            path.radius = sc;
            path.p_end = pc;
            return path;
        }
        s = sn;
        v = vn;
        p = pn;
        path.steps.push_back({s, v, p});
    }
    path.radius = s;
    path.p_end = p;
    return path;
}

// Cubic Hermite evaluation of v(s) on the stored path.
double eval_gap(const ShotPath& path, double s) {
    const auto& st = path.steps;
    if (s <= st.front().s) {
        // Inside the series segment v is within series accuracy of the
        // first stored value; a quadratic in s keeps v'(0) = 0.
        const double ratio = s / st.front().s;
        const double v0_axis = st.front().v - 0.5 * st.front().p * st.front().s;
        return v0_axis + 0.5 * st.front().p * st.front().s * ratio * ratio;
    }
    if (s >= st.back().s) return st.back().v;
    auto it = std::upper_bound(st.begin(), st.end(), s,
                               [](double val, const ShotStep& a) { return val < a.s; });
    const ShotStep& b = *it;
    const ShotStep& a = *(it - 1);
    const double h = b.s - a.s;
    const double x = (s - a.s) / h;
    const double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
    const double h10 = x * (1 - x) * (1 - x);
    const double h01 = x * x * (3 - 2 * x);
    const double h11 = x * x * (x - 1);
    return h00 * a.v + h10 * h * a.p + h01 * b.v + h11 * h * b.p;
}

// integral of s^{N-1} / v(s) over [0, R] from the stored path, Simpson per
// stored step with Hermite midpoints.
double path_weighted_integral(const ShotPath& path, int dim) {
    const auto& st = path.steps;
    auto f = [&](double s, double v) { return std::pow(s, dim - 1) / v; };
    double sum = 0.0;
    // series segment [0, s_start]
    {
        const double s1 = st.front().s;
        const int m = 8;
        const double h = s1 / m;
        double acc = 0.0;
        for (int i = 0; i <= m; ++i) {
            const double s = i * h;
            const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            const double v = eval_gap(path, s);
            acc += w * ((s == 0.0 && dim == 1) ? 1.0 / v : f(s, v));
        }
        sum += acc * h / 3.0;
    }
    for (std::size_t i = 0; i + 1 < st.size(); ++i) {
        const double h = st[i + 1].s - st[i].s;
        const double sm = 0.5 * (st[i].s + st[i + 1].s);
        const double vm = eval_gap(path, sm);
        sum += h / 6.0 * (f(st[i].s, st[i].v) + 4.0 * f(sm, vm) +
                          f(st[i + 1].s, st[i + 1].v));
    }
    return sum;
}

}  // namespace

SteadyBranchPoint shoot_profile(double delta, const SteadyProblem& problem) {
    if (!(delta > 0.0) || delta > 1.0)
        throw ShootingError("shoot_profile: delta must lie in (0, 1]");
    if (problem.dim < 1 || (problem.geometry == Geometry::Interval && problem.dim != 1))
        throw ConfigError("shoot_profile: invalid geometry/dimension");

    SteadyBranchPoint pt;
    pt.delta = delta;
    const int n = problem.profile_cells;
    pt.grid.resize(n + 1);
    for (int i = 0; i <= n; ++i) pt.grid[i] = static_cast<double>(i) / n;

    if (delta == 1.0) {
        // w(0) = 0 forces the zero solution with zero multiplier.
        pt.profile.assign(n + 1, 0.0);
        pt.mu = 0.0;
        pt.sup_w = 0.0;
        pt.integral_I = problem.geometry == Geometry::Interval
                            ? 1.0
                            : volume_unit_ball(problem.dim);
        pt.lambda = 0.0;
        return pt;
    }

    const ShotPath path = integrate_to_crossing(delta, problem.dim);
    const double R = path.radius;
    const int N = problem.dim;

    if (problem.geometry == Geometry::Ball) {
        // w(r) = what(R r): mu = R^2.
        pt.mu = R * R;
        pt.integral_I = N * volume_unit_ball(N) * std::pow(R, -N) *
                        path_weighted_integral(path, N);
        pt.profile.resize(n + 1);
        for (int i = 0; i <= n; ++i)
            pt.profile[i] = 1.0 - eval_gap(path, R * pt.grid[i]);
    } else {
        // Symmetric half-problem from the midpoint of (0,1); the domain
        // half-width 1/2 gives mu = (2R)^2.
        pt.mu = 4.0 * R * R;
        pt.integral_I = path_weighted_integral(path, 1) / R;
        pt.profile.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            const double s = 2.0 * R * std::abs(pt.grid[i] - 0.5);
            pt.profile[i] = 1.0 - eval_gap(path, s);
        }
    }
    pt.profile.front() = problem.geometry == Geometry::Ball ? pt.profile.front() : 0.0;
    pt.profile.back() = 0.0;
    pt.sup_w = *std::max_element(pt.profile.begin(), pt.profile.end());
    const double h = 1.0 + problem.alpha * pt.integral_I;
    pt.lambda = pt.mu * h * h;
    return pt;
}

std::vector<double> default_delta_grid(int n) {
    std::vector<double> grid(n);
    const double lo = std::log(1e-3), hi = std::log(0.999);
    for (int i = 0; i < n; ++i)
        grid[i] = std::exp(hi + (lo - hi) * i / (n - 1.0));
    return grid;  // decreasing in delta
}

std::vector<SteadyBranchPoint> trace_branch(
    const SteadyProblem& problem, std::span<const double> delta_grid,
    std::vector<std::pair<double, std::string>>* gaps) {
    std::vector<SteadyBranchPoint> branch;
    branch.reserve(delta_grid.size());
    for (double delta : delta_grid) {
        try {
            branch.push_back(shoot_profile(delta, problem));
        } catch (const Error& e) {
            if (gaps) gaps->emplace_back(delta, e.what());
        }
    }
    return branch;
}

LambdaStar lambda_star(const SteadyProblem& problem,
                       const std::vector<SteadyBranchPoint>& branch) {
    if (branch.empty()) throw ConfigError("lambda_star: empty branch");
    std::vector<const SteadyBranchPoint*> sorted;
    for (const auto& p : branch) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return a->delta < b->delta; });
    std::size_t imax = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i]->lambda > sorted[imax]->lambda) imax = i;

    LambdaStar out;
    out.lambda = sorted[imax]->lambda;
    out.delta = sorted[imax]->delta;
    out.fold_bracketed = imax > 0 && imax + 1 < sorted.size();
    if (!out.fold_bracketed) return out;

    // Golden-section refinement of the fold in delta.
    auto eval = [&](double d) { return shoot_profile(d, problem).lambda; };
    double a = sorted[imax - 1]->delta, b = sorted[imax + 1]->delta;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = eval(x1), f2 = eval(x2);
    for (int it = 0; it < 60 && (b - a) > 1e-10; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = eval(x1);
        }
    }
    const double dm = 0.5 * (a + b);
    const double fm = eval(dm);
    if (fm > out.lambda) {
        out.lambda = fm;
        out.delta = dm;
    }
    return out;
}

SteadyBranchPoint steady_profile_at_lambda(
    const SteadyProblem& problem, const std::vector<SteadyBranchPoint>& branch,
    double lambda) {
    const LambdaStar fold = lambda_star(problem, branch);
    if (lambda >= fold.lambda)
        throw ShootingError("steady_profile_at_lambda: lambda at or above the fold");
    // Low-deflection side: delta in (delta_fold, 1], lambda increases as
    // delta decreases.
    double lo = fold.delta, hi = 1.0;  // lambda(hi) = 0 < target < lambda(lo)
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double lm = shoot_profile(mid, problem).lambda;
        if (lm > lambda)
            lo = mid;
        else
            hi = mid;
    }
    return shoot_profile(0.5 * (lo + hi), problem);
}

double steady_residual_max(const SteadyBranchPoint& point,
                           const SteadyProblem& problem) {
    const int n = static_cast<int>(point.grid.size()) - 1;
    const double h = 1.0 / n;
    const auto& w = point.profile;
    const double hfac = 1.0 + problem.alpha * point.integral_I;
    const double f = point.lambda / (hfac * hfac);
    double worst = 0.0;
    for (int i = 2; i <= n - 2; ++i) {
        const double d2 = (-w[i - 2] + 16 * w[i - 1] - 30 * w[i] + 16 * w[i + 1] -
                           w[i + 2]) /
                          (12 * h * h);
        double lap = d2;
        if (problem.dim > 1) {
            const double r = point.grid[i];
            const double d1 =
                (w[i - 2] - 8 * w[i - 1] + 8 * w[i + 1] - w[i + 2]) / (12 * h);
            if (r > 1e-12) lap += (problem.dim - 1) * d1 / r;
        }
        const double gap = 1.0 - w[i];
        const double res = lap + f / (gap * gap);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace memsim
