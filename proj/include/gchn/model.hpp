#pragma once
// Right-hand sides of the evolved equations in nonlocal transport form:
//   u_t = -u^k u_x + P(u) + Q(u)
//   P(u) = -d_x (1-d_x^2)^{-1}( (2k-1)/2 * u^{k-1} u_x^2 + u^{k+1} )
//   Q(u) = -(k-1)/2 * (1-d_x^2)^{-1}( u^{k-2} u_x^3 )
// plus the Degasperis-Procesi variant u_t = -u u_x - (3/2) d_x (1-d_x^2)^{-1}(u^2).

#include "gchn/field.hpp"

namespace gchn {

struct Trajectory;

enum class Variant { GCHN, DP };

struct ModelParams {
    int k = 1;
    Variant variant = Variant::GCHN;
};

Field p_term(const Field& u, int k);
// Identically zero for k = 1 (the (k-1)/2 coefficient vanishes before the
// u^{k-2} factor would be formed).
Field q_term(const Field& u, int k);

Field rhs(const Field& u, const ModelParams& mp);

// First-order expansion coefficient v0 = P(u0) + Q(u0) - u0^k d_x u0.
// Equals rhs for the GCHN variant; named because the expansion experiment
// references it.
Field v0(const Field& u0, const ModelParams& mp);

// m-form consistency diagnostic: with m = u - u_xx, evaluates the residual of
// m_t + u^k m_x + (k+1) u^{k-1} u_x m = 0 at stored time `index` (centered
// difference in t), returned as ||residual||_2 / ||m||_2.
double m_residual(const Trajectory& traj, int index, const ModelParams& mp);

} // namespace gchn
