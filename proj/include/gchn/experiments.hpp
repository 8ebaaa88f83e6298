#pragma once
// The five verification experiments. Each returns a tabular report with the
// pass flag already evaluated against the thresholds in RunConfig.

#include "gchn/config.hpp"
#include "gchn/report.hpp"

namespace gchn {

// Partition of unity on the grid lattice plus dyadic-block idempotence and
// annihilation on the oscillating packets.
ExperimentReport exp_lp(const RunConfig& cfg);

// Static estimates on the witness datum: Besov-norm stability under
// truncation extension, the uniform-in-n lower-bound quantity, weighted
// commutator norms, and the nonlocal-term Besov norm.
ExperimentReport exp_witness(const RunConfig& cfg);

// Short-time expansion: ||u(t)-u0|| at one order below s scales like t, the
// remainder after subtracting t*v0 scales like t^2 two orders below s.
ExperimentReport exp_expansion(const RunConfig& cfg);

// The norm-defect mechanism along t_n = eps*2^{-n}: a positive floor at
// regularity s, decay at s-1, and the per-n term decomposition.
ExperimentReport exp_illposed(const RunConfig& cfg);

// H^1 conservation for k = 1..3 with RK4-order drift reduction under dt
// halving; the non-conserving variant's drift reported for contrast.
ExperimentReport exp_conserve(const RunConfig& cfg);

} // namespace gchn
