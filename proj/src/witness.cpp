#include "gchn/witness.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gchn/spectral_ops.hpp"

namespace gchn {
namespace {

constexpr double kCarrierBase = 17.0 / 12.0;

double carrier(int n) { return kCarrierBase * std::ldexp(1.0, n); }

} // namespace

double bump_hat(double xi, const BumpSpec& spec) {
    const double a = std::abs(xi);
    if (a <= spec.inner) return 1.0;
    if (a >= spec.outer) return 0.0;
    return smooth_step_down((a - spec.inner) / (spec.outer - spec.inner));
}

Field bump(const GridPtr& grid, const BumpSpec& spec) {
    if (!(spec.inner > 0.0) || !(spec.outer > spec.inner))
        throw std::invalid_argument("bump: need 0 < inner < outer");
    if (spec.outer >= grid->nyquist())
        throw std::invalid_argument("bump: support exceeds the grid Nyquist frequency");

    // Lattice Riemann sum of the inverse Fourier integral: the coefficient of
    // exp(i*xi_m*x) is bump_hat(xi_m) * dxi / (2*pi) = bump_hat(xi_m) / (2L).
    SpectralField coeffs(grid);
    const double scale = 1.0 / (2.0 * grid->half_period());
    for (int i = 0; i < grid->size(); ++i)
        coeffs.coeffs[i] = bump_hat(grid->xi(i), spec) * scale;
    Field phi = inverse(coeffs);

    const double center = phi[grid->size() / 2]; // x = 0
    const double edge = std::abs(phi[0]);        // x = -L
    if (!(center > 0.0) || edge > spec.tail_tol_rel * center)
        throw std::invalid_argument(
            "bump: domain tail |phi(-L)|/phi(0) = " + std::to_string(edge / center) +
            " exceeds tolerance; increase the period multiplier M");
    return phi;
}

int max_packet_index(const Grid& grid) {
    int n = -1;
    while (carrier(n + 1) + 0.5 <= grid.nyquist() * (1.0 + 1e-12)) ++n;
    return n;
}

Field packet(const GridPtr& grid, int n, const BumpSpec& spec) {
    if (n < 0) throw std::invalid_argument("packet: index must be nonnegative");
    const double lam = carrier(n);
    if (lam + spec.outer > grid->nyquist() * (1.0 + 1e-12))
        throw std::invalid_argument("packet: carrier " + std::to_string(lam) +
                                    " does not fit below Nyquist " +
                                    std::to_string(grid->nyquist()));

    // The product is exact pointwise: both factors are band-limited and the
    // combined band [lam - outer, lam + outer] stays below Nyquist.
    Field f = bump(grid, spec);
    for (int j = 0; j < f.size(); ++j) f[j] *= std::cos(lam * grid->x(j));
    return f;
}

WitnessData witness_data(const GridPtr& grid, const WitnessSpec& ws) {
    if (ws.n_modes < 0) throw std::invalid_argument("witness_data: n_modes must be >= 0");
    if (ws.n_probe < 3)
        throw std::invalid_argument("witness_data: n_probe must be >= 3 "
                                    "(single-block localization starts there)");
    if (ws.n_modes < ws.n_probe + 2)
        throw std::invalid_argument("witness_data: need n_modes >= n_probe + 2");
    if (ws.n_modes > max_packet_index(*grid))
        throw std::invalid_argument(
            "witness_data: n_modes exceeds the grid packet capacity " +
            std::to_string(max_packet_index(*grid)));
    if (!(ws.s > 0.0)) throw std::invalid_argument("witness_data: s must be positive");

    const Field phi = bump(grid, ws.bump);
    Field u0(grid);
    for (int n = 0; n <= ws.n_modes; ++n) {
        const double w = std::pow(2.0, -static_cast<double>(n) * ws.s);
        const double lam = carrier(n);
        for (int j = 0; j < u0.size(); ++j)
            u0[j] += w * phi[j] * std::cos(lam * grid->x(j));
    }

    WitnessData out{std::move(u0), 0.0};
    const double phi0 = phi[grid->size() / 2];
    out.tail_level_bound = phi0 * std::pow(2.0, -ws.s * (ws.n_modes + 1)) /
                           (1.0 - std::pow(2.0, -ws.s));
    return out;
}

PlateauBound plateau_bound(const Field& u0, int k, double s) {
    if (k < 1) throw std::invalid_argument("plateau_bound: k must be >= 1");
    const Grid& g = *u0.grid;
    const int center = g.size() / 2;
    const double level = std::abs(u0[center]) * std::pow(2.0, -1.0 / k);

    // Largest symmetric radius around x = 0 on which |u0| stays above
    // |u0(0)| * 2^{-1/k}, i.e. |u0^k| >= |u0(0)^k| / 2.
    int steps = 0;
    while (center - (steps + 1) >= 0 && center + (steps + 1) < g.size() &&
           std::abs(u0[center - (steps + 1)]) >= level &&
           std::abs(u0[center + (steps + 1)]) >= level)
        ++steps;

    const double phi0 = bump(u0.grid, BumpSpec{})[center];
    PlateauBound pb;
    pb.delta = steps * g.spacing();
    pb.bound = std::pow(2.0, s * k) * std::pow(phi0, k) /
               (2.0 * std::pow(std::pow(2.0, s) - 1.0, k));
    return pb;
}

double lower_bound_quantity(const Field& u0, int k, int n, double s, double p,
                            const LPFamily& fam) {
    if (k < 0) throw std::invalid_argument("lower_bound_quantity: k must be >= 0");
    Field dblock = derivative(block(u0, n, fam));
    if (k >= 1) dblock = product(int_power(u0, k), dblock);
    return std::pow(2.0, n * (s - 1.0)) * lp_norm(dblock, p);
}

LowerBoundSplit lower_bound_split(const Field& u0, int k, int n, double s, double p,
                                  const BumpSpec& spec) {
    if (k < 0) throw std::invalid_argument("lower_bound_split: k must be >= 0");
    const GridPtr& grid = u0.grid;
    const double lam = carrier(n);
    const Field phi = bump(grid, spec);
    const Field dphi = derivative(phi);

    Field env(grid), osc(grid);
    for (int j = 0; j < env.size(); ++j) {
        const double x = grid->x(j);
        env[j] = dphi[j] * std::cos(lam * x);
        osc[j] = phi[j] * std::sin(lam * x);
    }
    if (k >= 1) {
        const Field uk = int_power(u0, k);
        env = product(uk, env);
        osc = product(uk, osc);
    }

    const double weight =
        std::pow(2.0, n * (s - 1.0)) * std::pow(2.0, -static_cast<double>(n) * s);
    LowerBoundSplit out;
    out.envelope = weight * lp_norm(env, p);
    out.oscillation = weight * lam * lp_norm(osc, p);
    return out;
}

} // namespace gchn
