// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria run at desk scale (N = 2^18, M = 34, probes n in [4, 9]) across
// k in {1, 2, 3} and (s, p) in {(2, 2), (2, 4), (7/4, inf)}.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gchn/experiments.hpp"
#include "gchn/integrator.hpp"
#include "gchn/littlewood_paley.hpp"
#include "gchn/spectral_ops.hpp"
#include "gchn/witness.hpp"

using namespace gchn;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Combo {
    int k;
    double s, p;
};

const std::vector<Combo> kMatrix = {
    {1, 2.0, 2.0},  {1, 2.0, 4.0},  {1, 1.75, std::numeric_limits<double>::infinity()},
    {2, 2.0, 2.0},  {2, 2.0, 4.0},  {2, 1.75, std::numeric_limits<double>::infinity()},
    {3, 2.0, 2.0},  {3, 2.0, 4.0},  {3, 1.75, std::numeric_limits<double>::infinity()}};

// One representative per k covering every (s, p) pair; the dynamic criteria
// run on these to stay inside the per-combination runtime budgets.
const std::vector<Combo> kDynamic = {
    {1, 2.0, 2.0}, {2, 2.0, 4.0}, {3, 1.75, std::numeric_limits<double>::infinity()}};

RunConfig config_for(const Combo& c) {
    RunConfig cfg;
    cfg.model.k = c.k;
    cfg.besov.s = c.s;
    cfg.besov.p = c.p;
    return cfg;
}

std::string combo_name(const Combo& c) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "k=%d s=%g p=%g", c.k, c.s, c.p);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const auto t_all = std::chrono::steady_clock::now();

    { // 1. dyadic decomposition exactness
        const auto t0 = std::chrono::steady_clock::now();
        const ExperimentReport rep = exp_lp(RunConfig{});
        report(1, rep.pass,
               "partition and block localization (" + std::to_string(seconds_since(t0)) +
                   " s)");
    }

    { // 2. static witness bounds over the full matrix
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (const Combo& c : kMatrix) {
            const ExperimentReport rep = exp_witness(config_for(c));
            if (!rep.pass) {
                ok = false;
                detail += " " + combo_name(c);
            }
        }
        report(2, ok,
               (ok ? "besov stability and uniform lower bound, 9 combinations"
                   : "failing:" + detail) +
                   " (" + std::to_string(seconds_since(t0)) + " s)");
    }

    { // 3. short-time expansion slopes
        bool ok = true;
        std::string detail;
        for (const Combo& c : kDynamic) {
            const auto t0 = std::chrono::steady_clock::now();
            const ExperimentReport rep = exp_expansion(config_for(c));
            if (!rep.pass) ok = false;
            detail += combo_name(c) + ": " + std::to_string(seconds_since(t0)) + " s; ";
        }
        report(3, ok, "first/second-order slopes (" + detail + ")");
    }

    { // 4. norm-defect mechanism
        bool ok = true;
        std::string detail;
        for (const Combo& c : kDynamic) {
            const auto t0 = std::chrono::steady_clock::now();
            const ExperimentReport rep = exp_illposed(config_for(c));
            if (!rep.pass) ok = false;
            detail += combo_name(c) + ": " + std::to_string(seconds_since(t0)) + " s; ";
        }
        report(4, ok, "defect floor, decay rate and term decomposition (" + detail + ")");
    }

    { // 5. conservation
        const auto t0 = std::chrono::steady_clock::now();
        const ExperimentReport rep = exp_conserve(RunConfig{});
        report(5, rep.pass,
               "H1 drift and step-halving order (" + std::to_string(seconds_since(t0)) +
                   " s)");
    }

    { // 6. numerics hygiene
        bool ok = true;
        std::string detail;

        // transform round trip on the working grid
        const GridPtr g = Grid::make(262144, 34);
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Field f(g);
        for (double& v : f.values) v = dist(rng);
        const Field back = inverse(forward(f));
        double rt = 0.0;
        for (int i = 0; i < f.size(); ++i) rt = std::max(rt, std::abs(back[i] - f[i]));
        if (rt > 1e-12) ok = false;
        detail += "round trip " + fmt(rt);

        // m-form residual rate and time reversal on a small smooth run
        const GridPtr gc = Grid::make(1024, 17);
        Field u0(gc);
        for (int j = 0; j < u0.size(); ++j)
            u0[j] = 0.3 * std::cos(gc->x(j)) + 0.1 * std::sin(2 * gc->x(j));
        const ModelParams mp{2, Variant::GCHN};
        auto resid = [&](double dt) {
            StepControl sc;
            sc.dt = dt;
            return m_residual(solve(u0, 1.6e-2, sc, mp),
                              static_cast<int>(std::lround(8e-3 / dt)), mp);
        };
        const double rate = resid(2e-3) / resid(1e-3);
        if (std::abs(rate - 4.0) > 1.0) ok = false;
        detail += ", residual halving rate " + fmt(rate);

        StepControl sc;
        sc.dt = 1e-3;
        const auto fwd = [&](const Field& v) { return rhs(v, mp); };
        const auto bwd = [&](const Field& v) {
            Field r = rhs(v, mp);
            for (double& x : r.values) x = -x;
            return r;
        };
        const Field uT = solve(u0, 0.2, sc, fwd).final_state();
        const Field ub = solve(uT, 0.2, sc, bwd).final_state();
        StepControl half = sc;
        half.dt = 5e-4;
        const Field uT2 = solve(u0, 0.2, half, fwd).final_state();
        double rev = 0.0, self = 0.0;
        for (int j = 0; j < u0.size(); ++j) {
            rev = std::max(rev, std::abs(ub[j] - u0[j]));
            self = std::max(self, std::abs(uT[j] - uT2[j]));
        }
        if (rev > 10.0 * std::max(self, 1e-14)) ok = false;
        detail += ", reversal " + fmt(rev) + " vs self-convergence " + fmt(self);

        report(6, ok, detail);
    }

    std::printf("acceptance total: %.1f s, %d failure(s)\n", seconds_since(t_all),
                failures);
    return failures == 0 ? 0 : 1;
}
