#include <cmath>

#include "doctest.h"
#include "gchn/integrator.hpp"
#include "gchn/model.hpp"
#include "gchn/spectral_ops.hpp"

using namespace gchn;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GridPtr trig_grid() { return Grid::make(1024, 17); } // unit frequency on the lattice

Field sample(const GridPtr& g, double (*fn)(double)) {
    Field f(g);
    for (int j = 0; j < f.size(); ++j) f[j] = fn(g->x(j));
    return f;
}

double max_diff_fn(const Field& f, double (*fn)(double)) {
    double m = 0.0;
    for (int j = 0; j < f.size(); ++j)
        m = std::max(m, std::abs(f[j] - fn(f.grid->x(j))));
    return m;
}

} // namespace

// Closed-form checks: with u = cos x every operator reduces to a short trig
// identity through the multipliers 1/(1+xi^2) at xi = 1, 2, 3.

TEST_CASE("k = 1 nonlocal term on cos x") {
    const auto g = trig_grid();
    const Field p = p_term(sample(g, [](double x) { return std::cos(x); }), 1);
    // P = -d_x Lambda^{-2}(u_x^2/2 + u^2) = sin(2x)/10
    CHECK(max_diff_fn(p, [](double x) { return std::sin(2 * x) / 10.0; }) < 1e-12);
}

TEST_CASE("k = 1 full right-hand side on cos x") {
    const auto g = trig_grid();
    const Field r = rhs(sample(g, [](double x) { return std::cos(x); }),
                        ModelParams{1, Variant::GCHN});
    // -u u_x + P = sin(2x)/2 + sin(2x)/10
    CHECK(max_diff_fn(r, [](double x) { return 0.6 * std::sin(2 * x); }) < 1e-12);
}

TEST_CASE("DP variant right-hand side on cos x") {
    const auto g = trig_grid();
    const Field r = rhs(sample(g, [](double x) { return std::cos(x); }),
                        ModelParams{1, Variant::DP});
    // -u u_x - (3/2) d_x Lambda^{-2}(u^2) = sin(2x)/2 + 3 sin(2x)/10
    CHECK(max_diff_fn(r, [](double x) { return 0.8 * std::sin(2 * x); }) < 1e-12);
}

TEST_CASE("cubic-derivative term on sin x at k = 2") {
    const auto g = trig_grid();
    const Field q = q_term(sample(g, [](double x) { return std::sin(x); }), 2);
    // Q = -(1/2) Lambda^{-2}(cos^3 x) = -(3/16)cos x - (1/80)cos 3x
    CHECK(max_diff_fn(q, [](double x) {
              return -3.0 / 16.0 * std::cos(x) - std::cos(3 * x) / 80.0;
          }) < 1e-12);
}

TEST_CASE("cubic-derivative term is identically zero at k = 1") {
    const auto g = trig_grid();
    const Field q = q_term(sample(g, [](double x) { return std::sin(3 * x); }), 1);
    CHECK(lp_norm(q, kInf) == 0.0);
}

TEST_CASE("parity: even data produce odd right-hand sides") {
    const auto g = trig_grid();
    Field u(g);
    for (int j = 0; j < u.size(); ++j) {
        const double x = g->x(j);
        u[j] = std::cos(x) + 0.3 * std::cos(2 * x);
    }
    const int n = g->size();
    for (int k = 1; k <= 3; ++k) {
        const Field r = rhs(u, ModelParams{k, Variant::GCHN});
        double worst = 0.0;
        for (int j = 1; j < n; ++j)
            worst = std::max(worst, std::abs(r[j] + r[n - j]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("m-form residual shrinks at the centered-difference rate") {
    const auto g = trig_grid();
    Field u0(g);
    for (int j = 0; j < u0.size(); ++j)
        u0[j] = 0.3 * std::cos(g->x(j)) + 0.1 * std::sin(2 * g->x(j));
    const ModelParams mp{2, Variant::GCHN};

    // same physical center time for both step sizes
    const double T = 1.6e-2, t_mid = 8e-3;
    auto residual_at_dt = [&](double dt) {
        StepControl sc;
        sc.dt = dt;
        const Trajectory traj = solve(u0, T, sc, mp);
        return m_residual(traj, static_cast<int>(std::lround(t_mid / dt)), mp);
    };
    const double r1 = residual_at_dt(2e-3);
    const double r2 = residual_at_dt(1e-3);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
    CHECK(r2 < 1e-4);

    StepControl sc;
    sc.dt = 1e-3;
    const Trajectory traj = solve(u0, 5e-3, sc, mp);
    CHECK_THROWS_AS(m_residual(traj, 0, mp), std::out_of_range);
    CHECK_THROWS_AS(
        m_residual(traj, static_cast<int>(traj.states.size()) - 1, mp),
        std::out_of_range);
}
