#include "gchn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gchn/integrator.hpp"
#include "gchn/littlewood_paley.hpp"
#include "gchn/spectral_ops.hpp"
#include "gchn/witness.hpp"

namespace gchn {
namespace {

double pow2(double e) { return std::pow(2.0, e); }

Field sub(const Field& a, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Field axpyf(const Field& a, double c, const Field& b) {
    require_same_grid(a, b);
    Field out(a.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = a[i] + c * b[i];
    return out;
}

// Least-squares slope of y against x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

double slope_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return slope(lx, ly);
}

std::string variant_name(Variant v) { return v == Variant::DP ? "dp" : "gchn"; }

std::vector<std::string> param_columns() {
    return {"N", "M", "k", "variant", "s", "p"};
}

std::vector<std::string> param_cells(const RunConfig& cfg) {
    return {fmt(cfg.grid.n),  fmt(cfg.grid.m),
            fmt(cfg.model.k), variant_name(cfg.model.variant),
            fmt(cfg.besov.s), fmt(cfg.besov.p)};
}

void append(std::vector<std::string>& row, std::initializer_list<std::string> cells) {
    row.insert(row.end(), cells);
}

void check(ExperimentReport& rep, bool ok, const std::string& what) {
    rep.notes.push_back((ok ? "pass: " : "FAIL: ") + what);
    if (!ok) rep.pass = false;
}

Field make_u0(const GridPtr& grid, const RunConfig& cfg, int n_probe, int n_modes) {
    WitnessSpec ws;
    ws.s = cfg.besov.s;
    ws.k = cfg.model.k;
    ws.n_probe = n_probe;
    ws.n_modes = n_modes;
    ws.bump.tail_tol_rel = cfg.tolerances.bump_tail_rel;
    return witness_data(grid, ws).u0;
}

Field nonlocal_terms(const Field& u0, int k) {
    Field pq = p_term(u0, k);
    if (k >= 2) {
        const Field q = q_term(u0, k);
        for (int i = 0; i < pq.size(); ++i) pq[i] += q.values[i];
    }
    return pq;
}

} // namespace

ExperimentReport exp_lp(const RunConfig& cfg) {
    ExperimentReport rep;
    rep.id = "lp";
    rep.columns = param_columns();
    append(rep.columns, {"n", "j", "block_error", "partition_dev", "informational"});

    const GridPtr grid = Grid::make(cfg.grid.n, cfg.grid.m);
    const LPFamily fam(grid);

    // Partition of unity across the whole lattice: by the telescoping
    // construction the sum collapses to the outermost low-pass cutoff, which
    // equals 1 on every resolvable frequency.
    double part_dev = 0.0;
    for (int i = 0; i <= grid->size() / 2; ++i) {
        double sum = 0.0;
        for (int j = -1; j <= fam.j_max(); ++j) sum += fam.multiplier(j)[i];
        part_dev = std::max(part_dev, std::abs(sum - 1.0));
    }
    check(rep, part_dev <= cfg.tolerances.partition_dev,
          "partition-of-unity deviation " + fmt(part_dev));

    BumpSpec bs;
    bs.tail_tol_rel = cfg.tolerances.bump_tail_rel;
    std::vector<int> ns = {2}; // below the localization regime, reported only
    for (int n = cfg.witness.n_min; n <= cfg.witness.n_max; ++n) ns.push_back(n);

    double worst = 0.0;
    for (int n : ns) {
        const Field fn = packet(grid, n, bs);
        const double ref = lp_norm(fn, std::numeric_limits<double>::infinity());
        for (int j = -1; j <= fam.j_max(); ++j) {
            const Field bj = block(fn, j, fam);
            const Field err_f = j == n ? sub(bj, fn) : bj;
            const double err =
                lp_norm(err_f, std::numeric_limits<double>::infinity()) / ref;
            auto row = param_cells(cfg);
            append(row, {fmt(n), fmt(j), fmt(err), fmt(part_dev), n < 3 ? "1" : "0"});
            rep.rows.push_back(std::move(row));
            if (n >= 3) worst = std::max(worst, err);
        }
    }
    check(rep, worst <= cfg.tolerances.block_err_rel,
          "worst block idempotence/annihilation error " + fmt(worst) + " for n >= 3");
    return rep;
}

ExperimentReport exp_witness(const RunConfig& cfg) {
    ExperimentReport rep;
    rep.id = "witness";
    rep.columns = param_columns();
    append(rep.columns, {"n", "n_modes", "besov_norm_u0", "lower_bound_quantity",
                         "commutator_weighted_norm", "pq_besov_norm"});

    const GridPtr grid = Grid::make(cfg.grid.n, cfg.grid.m);
    const LPFamily fam(grid);
    const int k = cfg.model.k;
    const double s = cfg.besov.s, p = cfg.besov.p;
    const BesovParams bp{s, p, std::numeric_limits<double>::infinity()};
    const int capacity = max_packet_index(*grid);

    // Truncation stability: extending the mode sum beyond n_min + headroom
    // moves neither the Besov norm nor the nonlocal-term norm appreciably.
    std::vector<double> norms;
    for (int m = cfg.witness.n_min + 2; m <= capacity; ++m)
        norms.push_back(besov_norm(make_u0(grid, cfg, cfg.witness.n_min, m), bp, fam));
    const double var = *std::max_element(norms.begin(), norms.end()) /
                           *std::min_element(norms.begin(), norms.end()) -
                       1.0;
    check(rep, var <= cfg.tolerances.besov_variation,
          "besov norm truncation variation " + fmt(var));

    // The nonlocal-term norm converges as modes are added (the sup-block can
    // shift while the tail is still coarse), so stability is judged on the
    // final refinement step, not against the shortest truncation.
    const double pq_prev = besov_norm(
        nonlocal_terms(make_u0(grid, cfg, cfg.witness.n_min, capacity - 1), k), bp,
        fam);
    const double pq_full = besov_norm(
        nonlocal_terms(make_u0(grid, cfg, cfg.witness.n_min, capacity), k), bp, fam);
    const double pq_var = std::abs(pq_full - pq_prev) / pq_full;
    check(rep, std::isfinite(pq_full) && pq_var <= cfg.tolerances.pq_variation,
          "nonlocal-term besov norm refinement variation " + fmt(pq_var));

    const int count = cfg.witness.n_max - cfg.witness.n_min + 1;
    std::vector<double> besov_v(count), lbq_v(count), comm_v(count), pq_v(count);
    std::vector<int> modes_v(count);
    parallel_for(count, [&](int idx) {
        const int n = cfg.witness.n_min + idx;
        const int n_modes = std::min(n + cfg.witness.headroom, capacity);
        const Field u0 = make_u0(grid, cfg, n, n_modes);
        const Field uk = int_power(u0, k);
        modes_v[idx] = n_modes;
        besov_v[idx] = besov_norm(u0, bp, fam);
        lbq_v[idx] = lower_bound_quantity(u0, k, n, s, p, fam);
        comm_v[idx] = pow2(n * s) * lp_norm(commutator(uk, u0, n, fam), p);
        pq_v[idx] = besov_norm(nonlocal_terms(u0, k), bp, fam);
    });

    for (int idx = 0; idx < count; ++idx) {
        auto row = param_cells(cfg);
        append(row, {fmt(cfg.witness.n_min + idx), fmt(modes_v[idx]), fmt(besov_v[idx]),
                     fmt(lbq_v[idx]), fmt(comm_v[idx]), fmt(pq_v[idx])});
        rep.rows.push_back(std::move(row));
    }

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int idx = 0; idx < count; ++idx) {
        if (cfg.witness.n_min + idx < 4) continue;
        lo = std::min(lo, lbq_v[idx]);
        hi = std::max(hi, lbq_v[idx]);
    }
    check(rep, lo / hi >= cfg.tolerances.lbq_min_ratio,
          "lower-bound quantity min/max " + fmt(lo / hi) + " over n >= 4");

    std::vector<double> sorted = comm_v;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double comm_ratio = sorted.back() / median;
    check(rep, comm_ratio <= cfg.tolerances.comm_max_over_median,
          "weighted commutator max/median " + fmt(comm_ratio));
    return rep;
}

ExperimentReport exp_expansion(const RunConfig& cfg) {
    ExperimentReport rep;
    rep.id = "expansion";
    rep.columns = param_columns();
    append(rep.columns, {"t", "d1", "d2", "d2_control", "d2_at_s"});

    const GridPtr grid = Grid::make(cfg.grid.n, cfg.grid.m);
    const LPFamily fam(grid);
    const double s = cfg.besov.s, p = cfg.besov.p;
    const double inf = std::numeric_limits<double>::infinity();
    const ModelParams mp{cfg.model.k, cfg.model.variant};

    const Field u0 = make_u0(grid, cfg, cfg.witness.n_min,
                             cfg.witness.n_min + cfg.witness.headroom);
    const Field v0f = rhs(u0, mp);
    const auto f = [&mp](const Field& v) { return rhs(v, mp); };

    const int pts = cfg.expansion.points;
    std::vector<double> ts(pts), d1(pts), d2(pts), d2c(pts), d2s(pts);
    for (int i = 0; i < pts; ++i)
        ts[i] = cfg.expansion.t_min *
                std::pow(cfg.expansion.t_max / cfg.expansion.t_min,
                         static_cast<double>(i) / (pts - 1));

    auto measure = [&](double t, int steps, double* out_d1, double* out_d2,
                       double* out_d2c, double* out_d2s) {
        StepControl sc;
        sc.dt = t / steps;
        sc.store_every = steps;
        // Fixed-step study: the pointwise advisory is skipped on purpose
        // (stability here is set by the spectral radius, verified by the
        // refinement check below).
        const Field u = solve(u0, t, sc, f).final_state();
        const Field d = sub(u, u0);
        const Field w = axpyf(d, -t, v0f);
        *out_d1 = besov_norm(d, {s - 1.0, p, inf}, fam);
        *out_d2 = besov_norm(w, {s - 2.0, p, inf}, fam);
        if (out_d2c) *out_d2c = besov_norm(d, {s - 2.0, p, inf}, fam);
        if (out_d2s) *out_d2s = besov_norm(w, {s, p, inf}, fam);
    };

    parallel_for(pts, [&](int i) {
        measure(ts[i], cfg.sweep.steps_per_horizon, &d1[i], &d2[i], &d2c[i], &d2s[i]);
    });

    for (int i = 0; i < pts; ++i) {
        auto row = param_cells(cfg);
        append(row, {fmt(ts[i]), fmt(d1[i]), fmt(d2[i]), fmt(d2c[i]), fmt(d2s[i])});
        rep.rows.push_back(std::move(row));
    }

    const Tolerances& tl = cfg.tolerances;
    const double s1 = slope_loglog(ts, d1);
    const double s2 = slope_loglog(ts, d2);
    const double sc_ = slope_loglog(ts, d2c);
    check(rep, s1 >= tl.d1_slope_lo && s1 <= tl.d1_slope_hi,
          "first-order defect slope " + fmt(s1));
    check(rep, s2 >= tl.d2_slope_lo && s2 <= tl.d2_slope_hi,
          "second-order remainder slope " + fmt(s2));
    check(rep, sc_ >= tl.control_slope_lo && sc_ <= tl.control_slope_hi,
          "zero-coefficient control slope " + fmt(sc_));
    rep.notes.push_back("info: remainder slope measured at regularity s (not "
                        "asserted): " +
                        fmt(slope_loglog(ts, d2s)));

    // dt-refinement: the largest horizon re-run with halved steps.
    double r1, r2;
    measure(ts[pts - 1], 2 * cfg.sweep.steps_per_horizon, &r1, &r2, nullptr, nullptr);
    const double rel = std::max(std::abs(r1 - d1[pts - 1]) / d1[pts - 1],
                                std::abs(r2 - d2[pts - 1]) / d2[pts - 1]);
    check(rep, rel <= tl.dt_refine_rel, "dt-refinement relative change " + fmt(rel));
    return rep;
}

ExperimentReport exp_illposed(const RunConfig& cfg) {
    ExperimentReport rep;
    rep.id = "illposed";
    rep.columns = param_columns();
    append(rep.columns, {"n", "t_n", "D_s", "D_s_minus_1", "main_term",
                         "commutator_term", "pq_term", "remainder_measured",
                         "remainder_budget", "dominates"});

    const GridPtr grid = Grid::make(cfg.grid.n, cfg.grid.m);
    const LPFamily fam(grid);
    const int k = cfg.model.k;
    const double s = cfg.besov.s, p = cfg.besov.p;
    const double inf = std::numeric_limits<double>::infinity();
    const double eps = cfg.sweep.epsilon;
    const ModelParams mp{k, cfg.model.variant};
    const auto f = [&mp](const Field& v) { return rhs(v, mp); };
    const int capacity = max_packet_index(*grid);

    const int count = cfg.witness.n_max - cfg.witness.n_min + 1;
    std::vector<double> Ds(count), Ds1(count), main_t(count), comm_t(count),
        pq_t(count), rem_t(count);
    parallel_for(count, [&](int idx) {
        const int n = cfg.witness.n_min + idx;
        const int n_modes = std::min(n + cfg.witness.headroom, capacity);
        const Field u0 = make_u0(grid, cfg, n, n_modes);
        const double tn = eps * pow2(-n);

        StepControl sc;
        sc.dt = tn / cfg.sweep.steps_per_horizon;
        sc.store_every = cfg.sweep.steps_per_horizon;
        const Field u = solve(u0, tn, sc, f).final_state();
        const Field d = sub(u, u0);
        const Field w = axpyf(d, -tn, rhs(u0, mp));

        Ds[idx] = besov_norm(d, {s, p, inf}, fam);
        Ds1[idx] = besov_norm(d, {s - 1.0, p, inf}, fam);

        const Field uk = int_power(u0, k);
        main_t[idx] = tn * pow2(n * s) *
                      lp_norm(product(uk, derivative(block(u0, n, fam))), p);
        comm_t[idx] = tn * pow2(n * s) * lp_norm(commutator(uk, u0, n, fam), p);
        pq_t[idx] = tn * besov_norm(nonlocal_terms(u0, k), {s, p, inf}, fam);
        rem_t[idx] = pow2(2 * n) * besov_norm(w, {s - 2.0, p, inf}, fam);
    });

    int crossover = -1;
    for (int idx = count - 1; idx >= 0; --idx) {
        if (main_t[idx] > comm_t[idx] + pq_t[idx] + rem_t[idx])
            crossover = cfg.witness.n_min + idx;
        else
            break;
    }

    for (int idx = 0; idx < count; ++idx) {
        const int n = cfg.witness.n_min + idx;
        const bool dom = main_t[idx] > comm_t[idx] + pq_t[idx] + rem_t[idx];
        auto row = param_cells(cfg);
        append(row, {fmt(n), fmt(eps * pow2(-n)), fmt(Ds[idx]), fmt(Ds1[idx]),
                     fmt(main_t[idx]), fmt(comm_t[idx]), fmt(pq_t[idx]),
                     fmt(rem_t[idx]), fmt(eps * eps), dom ? "1" : "0"});
        rep.rows.push_back(std::move(row));
    }

    const Tolerances& tl = cfg.tolerances;
    const double floor_ratio = *std::min_element(Ds.begin(), Ds.end()) /
                               *std::max_element(Ds.begin(), Ds.end());
    check(rep, floor_ratio >= tl.ds_floor_ratio,
          "defect floor min/max at regularity s: " + fmt(floor_ratio));
    rep.notes.push_back("info: measured floor c1*eps = " +
                        fmt(*std::min_element(Ds.begin(), Ds.end())));

    std::vector<double> ns(count), lds1(count);
    for (int idx = 0; idx < count; ++idx) {
        ns[idx] = cfg.witness.n_min + idx;
        lds1[idx] = std::log2(Ds1[idx]);
    }
    const double sl = slope(ns, lds1);
    check(rep, sl >= tl.ds1_slope_lo && sl <= tl.ds1_slope_hi,
          "defect log2-slope at regularity s-1: " + fmt(sl));

    check(rep, crossover >= 0,
          "main-term dominance crossover index " + fmt(crossover));
    // Triangle-inequality direction of the decomposition: exact up to the
    // arithmetic of the transforms.
    bool chain_ok = true;
    for (int idx = 0; idx < count; ++idx)
        chain_ok = chain_ok && (main_t[idx] - comm_t[idx] - pq_t[idx] - rem_t[idx] <=
                                Ds[idx] * (1.0 + 1e-9) + 1e-12);
    check(rep, chain_ok, "decomposition lower-bounds the measured defect");
    return rep;
}

ExperimentReport exp_conserve(const RunConfig& cfg) {
    ExperimentReport rep;
    rep.id = "conserve";
    rep.columns = {"N",  "M",  "variant",  "k",       "steps",
                   "dt", "h1_initial", "h1_final", "h1_drift"};

    const GridPtr grid = Grid::make(cfg.conserve.n, cfg.conserve.m);

    // Asymmetric two-carrier data: a shifted second packet breaks the even
    // symmetry whose time-reversal cancellation would otherwise push the
    // observed convergence order from 4 to 5.
    BumpSpec bs;
    bs.tail_tol_rel = 1.0; // coarse domain; localization is irrelevant here
    const Field phi = bump(grid, bs);
    const double lam = (17.0 / 12.0) * 2.0;
    const int n_pts = grid->size();
    const int shift = n_pts / 5;
    Field base(grid);
    for (int j = 0; j < n_pts; ++j) {
        const double x = grid->x(j);
        base[j] = phi[j] * std::cos(lam * x) +
                  0.6 * phi[(j - shift % n_pts + n_pts) % n_pts] * std::cos(1.5 * lam * x);
    }
    const double scale =
        cfg.conserve.amplitude / lp_norm(base, std::numeric_limits<double>::infinity());
    Field u0(grid);
    for (int j = 0; j < n_pts; ++j) u0[j] = scale * base[j];
    const double h0 = h1_norm(u0);
    const double T = cfg.conserve.horizon;

    auto drift_for = [&](const ModelParams& mp, int steps) {
        StepControl sc;
        sc.dt = T / steps;
        sc.store_every = steps;
        const auto f = [&mp](const Field& v) { return rhs(v, mp); };
        const double h = h1_norm(solve(u0, T, sc, f).final_state());
        auto row = std::vector<std::string>{
            fmt(cfg.conserve.n), fmt(cfg.conserve.m), variant_name(mp.variant),
            fmt(mp.k),           fmt(steps),          fmt(T / steps),
            fmt(h0),             fmt(h),              fmt(std::abs(h - h0) / h0)};
        rep.rows.push_back(std::move(row));
        return std::abs(h - h0) / h0;
    };

    const Tolerances& tl = cfg.tolerances;
    for (int k = 1; k <= 3; ++k) {
        const ModelParams mp{k, Variant::GCHN};
        const double d0 = drift_for(mp, cfg.conserve.base_steps);
        const double d1 = drift_for(mp, 2 * cfg.conserve.base_steps);
        const double d2 = drift_for(mp, 4 * cfg.conserve.base_steps);
        check(rep, std::max({d0, d1, d2}) <= tl.h1_drift,
              "k=" + std::to_string(k) + " H1 relative drift " + fmt(std::max({d0, d1, d2})));
        const double ratio = d0 / d1;
        check(rep,
              ratio >= tl.drift_ratio * (1.0 - tl.drift_ratio_rel) &&
                  ratio <= tl.drift_ratio * (1.0 + tl.drift_ratio_rel),
              "k=" + std::to_string(k) + " drift reduction under dt halving " + fmt(ratio));
        rep.notes.push_back("info: k=" + std::to_string(k) +
                            " second halving ratio " + fmt(d1 / d2));
    }

    const double dp_drift =
        drift_for(ModelParams{1, Variant::DP}, 2 * cfg.conserve.base_steps);
    rep.notes.push_back(
        "info: non-conserving variant H1 drift (reported, not asserted): " +
        fmt(dp_drift));
    return rep;
}

} // namespace gchn
