#include <cmath>

#include "doctest.h"
#include "gchn/integrator.hpp"
#include "gchn/spectral_ops.hpp"

using namespace gchn;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GridPtr grid() { return Grid::make(1024, 17); }

Field cosq(const GridPtr& g, double q, double shift = 0.0) {
    Field f(g);
    for (int j = 0; j < f.size(); ++j) f[j] = std::cos(q * (g->x(j) - shift));
    return f;
}

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

} // namespace

TEST_CASE("injected linear advection matches the translated exact solution") {
    const auto g = grid();
    const double c = 0.7, q = 3.0;
    const Field u0 = cosq(g, q);
    const RhsFn f = [c](const Field& v) {
        Field d = derivative(v);
        for (double& x : d.values) x *= -c;
        return d;
    };
    StepControl sc;
    sc.dt = 1e-3;
    const double T = 0.25;
    const Field u = solve(u0, T, sc, f).final_state();
    CHECK(max_diff(u, cosq(g, q, c * T)) < 1e-9);
}

TEST_CASE("nonlinear self-convergence at fourth order") {
    const auto g = grid();
    // asymmetric data: on even profiles a parity cancellation suppresses the
    // leading dt^4 error term and masks the order
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j)
        u0[j] = 0.4 * std::cos(g->x(j)) + 0.15 * std::sin(2.0 * g->x(j) + 0.5);
    const ModelParams mp{1, Variant::GCHN};
    const double T = 0.2;

    auto run = [&](double dt) {
        StepControl sc;
        sc.dt = dt;
        sc.store_every = 1 << 20;
        return solve(u0, T, sc, mp).final_state();
    };
    const Field a = run(4e-3), b = run(2e-3), c = run(1e-3);
    const double e1 = max_diff(a, b), e2 = max_diff(b, c);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.25));
}

TEST_CASE("time reversal returns to the initial state") {
    const auto g = grid();
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j) u0[j] = 0.4 * std::cos(g->x(j));
    const ModelParams mp{1, Variant::GCHN};
    const auto fwd = [&](const Field& v) { return rhs(v, mp); };
    const auto bwd = [&](const Field& v) {
        Field r = rhs(v, mp);
        for (double& x : r.values) x = -x;
        return r;
    };
    StepControl sc;
    sc.dt = 1e-3;
    const double T = 0.2;
    const Field u = solve(u0, T, sc, fwd).final_state();
    const Field back = solve(u, T, sc, bwd).final_state();

    // compare against the forward self-convergence error at the same dt
    StepControl sc2 = sc;
    sc2.dt = 5e-4;
    const double self_err =
        max_diff(u, solve(u0, T, sc2, fwd).final_state());
    CHECK(max_diff(back, u0) < 10.0 * std::max(self_err, 1e-14));
}

TEST_CASE("storage thinning changes bookkeeping, not the answer") {
    const auto g = grid();
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j) u0[j] = 0.3 * std::sin(2 * g->x(j));
    const ModelParams mp{2, Variant::GCHN};
    StepControl dense;
    dense.dt = 1e-3;
    StepControl thin = dense;
    thin.store_every = 7;

    const Trajectory a = solve(u0, 0.05, dense, mp);
    const Trajectory b = solve(u0, 0.05, thin, mp);
    CHECK(max_diff(a.final_state(), b.final_state()) == 0.0);
    CHECK(a.states.size() == 51);
    CHECK(b.states.size() < a.states.size());
    CHECK(a.diagnostics.size() == b.diagnostics.size()); // diagnostics stay dense
    CHECK(b.times.back() == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("final partial step lands exactly on the horizon") {
    const auto g = grid();
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j) u0[j] = 0.2 * std::cos(g->x(j));
    StepControl sc;
    sc.dt = 3e-3;
    const Trajectory traj = solve(u0, 0.01, sc, ModelParams{1, Variant::GCHN});
    CHECK(traj.times.back() == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("guards and argument validation") {
    const auto g = grid();
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j) u0[j] = 0.4 * std::cos(g->x(j));
    const ModelParams mp{1, Variant::GCHN};

    StepControl sc;
    sc.dt = -1.0;
    CHECK_THROWS_AS(solve(u0, 0.1, sc, mp), std::invalid_argument);

    sc.dt = 1e-3;
    sc.blowup_threshold = 1e-9; // trip immediately
    try {
        solve(u0, 0.1, sc, mp);
        FAIL("expected SolveError");
    } catch (const SolveError& e) {
        CHECK(e.failure_time() > 0.0);
        CHECK(e.failure_time() <= 0.1);
    }

    sc.blowup_threshold = 1e4;
    const Trajectory still = solve(u0, 0.0, sc, mp);
    CHECK(still.states.size() == 1);
    CHECK(still.diagnostics.front().h1 == doctest::Approx(h1_norm(u0)));
}
