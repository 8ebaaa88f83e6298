#pragma once
// Fixed-step classical RK4 for the method-of-lines system.

#include <functional>
#include <stdexcept>
#include <vector>

#include "gchn/field.hpp"
#include "gchn/model.hpp"

namespace gchn {

struct StepDiagnostics {
    double t = 0.0;
    double l2 = 0.0;
    double h1 = 0.0;
    double max_abs = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> states;
    std::vector<StepDiagnostics> diagnostics;

    const Field& final_state() const { return states.back(); }
};

struct StepControl {
    double dt = 1e-3;
    double cfl_fraction = 0.5;
    int store_every = 1;
    // Smooth-regime guard: abort once max|u_x| exceeds this.
    double blowup_threshold = 1e4;
};

class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, double t_fail)
        : std::runtime_error(what), t_fail_(t_fail) {}
    double failure_time() const { return t_fail_; }

private:
    double t_fail_;
};

using RhsFn = std::function<Field(const Field&)>;

// One classical RK4 stage combination of an arbitrary right-hand side.
Field rk4_step(const Field& u, double dt, const RhsFn& f);
Field rk4_step(const Field& u, double dt, const ModelParams& mp);

// Integrates to T with fixed steps (last partial step shortened to land on T
// exactly). Throws SolveError on NaN/Inf or on the smooth-regime guard.
Trajectory solve(const Field& u0, double T, const StepControl& sc, const ModelParams& mp);
Trajectory solve(const Field& u0, double T, const StepControl& sc, const RhsFn& f,
                 const ModelParams* cfl_model = nullptr);

} // namespace gchn
