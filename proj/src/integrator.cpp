#include "gchn/integrator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gchn/kernels.hpp"
#include "gchn/spectral_ops.hpp"

namespace gchn {
namespace {

Field shifted(const Field& u, double a, const Field& d) {
    Field out(u.grid);
    kernels::active().axpy(out.values.data(), u.values.data(), a, d.values.data(),
                           u.values.size());
    return out;
}

} // namespace

Field rk4_step(const Field& u, double dt, const RhsFn& f) {
    if (dt <= 0.0) throw std::invalid_argument("rk4_step: dt must be positive");
    const Field k1 = f(u);
    const Field k2 = f(shifted(u, 0.5 * dt, k1));
    const Field k3 = f(shifted(u, 0.5 * dt, k2));
    const Field k4 = f(shifted(u, dt, k3));
    Field out(u.grid);
    kernels::active().combine4(out.values.data(), u.values.data(), dt / 6.0,
                               k1.values.data(), dt / 3.0, k2.values.data(), dt / 3.0,
                               k3.values.data(), dt / 6.0, k4.values.data(),
                               u.values.size());
    return out;
}

Field rk4_step(const Field& u, double dt, const ModelParams& mp) {
    return rk4_step(u, dt, [&mp](const Field& v) { return rhs(v, mp); });
}

Trajectory solve(const Field& u0, double T, const StepControl& sc, const ModelParams& mp) {
    return solve(
        u0, T, sc, [&mp](const Field& v) { return rhs(v, mp); }, &mp);
}

Trajectory solve(const Field& u0, double T, const StepControl& sc, const RhsFn& f,
                 const ModelParams* cfl_model) {
    if (sc.dt <= 0.0) throw std::invalid_argument("solve: dt must be positive");
    if (sc.cfl_fraction <= 0.0 || sc.cfl_fraction > 1.0)
        throw std::invalid_argument("solve: cfl_fraction must be in (0, 1]");
    if (T < 0.0) throw std::invalid_argument("solve: T must be nonnegative");

    if (cfl_model) {
        const double umax = kernels::active().max_abs(u0.values.data(), u0.values.size());
        const double speed = std::max(1.0, std::pow(umax, cfl_model->k));
        const double dt_adv = sc.cfl_fraction * u0.grid->spacing() / speed;
        if (sc.dt > dt_adv)
            std::fprintf(stderr,
                         "warning: dt=%.3e exceeds advisory CFL bound %.3e\n", sc.dt,
                         dt_adv);
    }

    auto diag_of = [](const Field& u, double t) {
        StepDiagnostics d;
        d.t = t;
        d.l2 = lp_norm(u, 2.0);
        d.h1 = h1_norm(u);
        d.max_abs = lp_norm(u, std::numeric_limits<double>::infinity());
        return d;
    };

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(u0);
    traj.diagnostics.push_back(diag_of(u0, 0.0));

    Field u = u0;
    double t = 0.0;
    int step = 0;
    while (t < T - 1e-14 * std::max(1.0, T)) {
        const double dt = std::min(sc.dt, T - t);
        u = rk4_step(u, dt, f);
        t += dt;
        ++step;

        if (!all_finite(u))
            throw SolveError("solve: non-finite state encountered", t);
        const double slope =
            lp_norm(derivative(u), std::numeric_limits<double>::infinity());
        if (slope > sc.blowup_threshold)
            throw SolveError("solve: smooth-regime guard tripped (max|u_x| = " +
                                 std::to_string(slope) + ")",
                             t);

        traj.diagnostics.push_back(diag_of(u, t));
        const bool last = !(t < T - 1e-14 * std::max(1.0, T));
        if (step % std::max(1, sc.store_every) == 0 || last) {
            traj.times.push_back(t);
            traj.states.push_back(u);
        }
    }
    return traj;
}

} // namespace gchn
