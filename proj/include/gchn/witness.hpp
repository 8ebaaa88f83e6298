#pragma once
// The ill-posedness witness: a band-limited even bump phi, the frequency-
// localized packets f_n(x) = phi(x) cos((17/12) 2^n x), and the initial datum
// u0 = sum_n 2^{-ns} f_n, together with the quantities entering its
// lower-bound estimates.

#include <utility>

#include "gchn/field.hpp"
#include "gchn/littlewood_paley.hpp"

namespace gchn {

struct BumpSpec {
    double inner = 0.25; // bump-hat == 1 for |xi| <= inner
    double outer = 0.5;  // bump-hat == 0 for |xi| >= outer
    // Tail check: require |phi(-L)| <= tail_tol_rel * phi(0) at construction.
    double tail_tol_rel = 1e-10;
};

struct WitnessSpec {
    double s = 2.0;
    int k = 1;
    int n_modes = 11;  // truncation of the mode sum (levels 0..n_modes)
    int n_probe = 9;   // the dyadic index under test
    BumpSpec bump{};
};

// Value of the smooth compactly supported bump-hat at frequency xi.
double bump_hat(double xi, const BumpSpec& spec);

// phi as the lattice Riemann sum of (1/2pi) * integral bump-hat * e^{i x xi}.
// Throws if the domain tail exceeds the tolerance (advises a larger M).
Field bump(const GridPtr& grid, const BumpSpec& spec);

// Largest dyadic index n whose packet spectrum fits on the grid,
// i.e. (17/12)*2^n + 1/2 <= Nyquist.
int max_packet_index(const Grid& grid);

// f_n = phi(x) cos((17/12) 2^n x); the carrier is an exact lattice frequency.
Field packet(const GridPtr& grid, int n, const BumpSpec& spec);

struct WitnessData {
    Field u0;
    // Sup-norm bound on the dropped geometric tail
    // sum_{n > n_modes} 2^{-ns} phi(0) = phi(0) 2^{-s(n_modes+1)} / (1 - 2^{-s}).
    double tail_level_bound = 0.0;
};

WitnessData witness_data(const GridPtr& grid, const WitnessSpec& ws);

struct PlateauBound {
    double delta;  // largest grid-measured radius with |u0^k| >= |u0(0)^k|/2
    double bound;  // analytic plateau value 2^{sk} phi(0)^k / (2 (2^s-1)^k)
};

PlateauBound plateau_bound(const Field& u0, int k, double s);

// 2^{n(s-1)} ||u0^k d_x Delta_n u0||_p; k = 0 degenerates to the plain
// weighted block-derivative norm.
double lower_bound_quantity(const Field& u0, int k, int n, double s, double p,
                            const LPFamily& fam);

struct LowerBoundSplit {
    double envelope;    // 2^{n(s-1)} * 2^{-ns} ||u0^k phi' cos||_p  (O(2^{-n}) weight)
    double oscillation; // 2^{n(s-1)} * (17/12) 2^n 2^{-ns} ||u0^k phi sin||_p
};

// The two-term split of d_x Delta_n u0 from the proof's product rule.
LowerBoundSplit lower_bound_split(const Field& u0, int k, int n, double s, double p,
                                  const BumpSpec& spec);

} // namespace gchn
