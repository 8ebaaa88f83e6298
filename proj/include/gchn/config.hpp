#pragma once
// Run configuration: a single JSON document, every field optional, unknown
// keys rejected. Thresholds the experiments assert against are pinned here.

#include <stdexcept>
#include <string>

#include "gchn/model.hpp"

namespace gchn {

struct GridConfig {
    int n = 262144;
    int m = 34;
};

struct ModelConfig {
    int k = 1;
    Variant variant = Variant::GCHN;
};

struct BesovConfig {
    double s = 2.0;
    double p = 2.0;
};

struct WitnessConfig {
    int n_min = 4;
    int n_max = 9;
    // The datum probed at level n is rebuilt with n_modes = n + headroom, so
    // every probe sees the same relative truncation.
    int headroom = 2;
};

struct SweepConfig {
    double epsilon = 0.01;
    int steps_per_horizon = 32;
};

struct ExpansionConfig {
    double t_min = 2e-4;
    double t_max = 2e-2;
    int points = 8;
};

struct ConserveConfig {
    // Deliberately coarse, separate grid: the conservation study needs long
    // horizons, not frequency headroom.
    int n = 4096;
    int m = 4;
    double amplitude = 0.6;
    double horizon = 0.5;
    int base_steps = 96;
};

struct Tolerances {
    double partition_dev = 1e-12;
    double block_err_rel = 1e-10;
    double bump_tail_rel = 1e-10;

    double besov_variation = 0.05;
    double lbq_min_ratio = 0.5;
    double comm_max_over_median = 4.0;
    double pq_variation = 0.05;

    double d1_slope_lo = 0.9, d1_slope_hi = 1.1;
    double d2_slope_lo = 1.8, d2_slope_hi = 2.2;
    double control_slope_lo = 0.8, control_slope_hi = 1.2;
    double dt_refine_rel = 1e-3;

    double ds_floor_ratio = 0.3;
    double ds1_slope_lo = -1.2, ds1_slope_hi = -0.8;

    double h1_drift = 1e-6;
    double drift_ratio = 16.0;
    double drift_ratio_rel = 0.3;
};

struct RunConfig {
    GridConfig grid;
    ModelConfig model;
    BesovConfig besov;
    WitnessConfig witness;
    SweepConfig sweep;
    ExpansionConfig expansion;
    ConserveConfig conserve;
    Tolerances tolerances;
    std::string output_dir = "out";
    unsigned seed = 1234; // randomized property tests only
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses and validates; ConfigError carries line/column for malformed JSON.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& origin);
void validate(const RunConfig& cfg);

} // namespace gchn
