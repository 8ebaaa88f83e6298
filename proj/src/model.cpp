#include "gchn/model.hpp"

#include <stdexcept>

#include "gchn/integrator.hpp"
#include "gchn/spectral_ops.hpp"

namespace gchn {
namespace {

Field scaled(Field f, double a) {
    for (double& v : f.values) v *= a;
    return f;
}

Field sum(const Field& a, const Field& b) {
    Field out(a.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

} // namespace

Field p_term(const Field& u, int k) {
    if (k < 1) throw std::invalid_argument("p_term: k must be >= 1");
    const Field ux = derivative(u);
    Field quad = product(ux, ux);
    if (k >= 2) quad = product(int_power(u, k - 1), quad);
    Field arg = sum(scaled(std::move(quad), 0.5 * (2 * k - 1)), int_power(u, k + 1));
    return scaled(derivative(helmholtz_inverse(arg)), -1.0);
}

Field q_term(const Field& u, int k) {
    if (k < 1) throw std::invalid_argument("q_term: k must be >= 1");
    if (k == 1) return Field(u.grid);
    const Field ux = derivative(u);
    Field cubed = product(product(ux, ux), ux);
    if (k >= 3) cubed = product(int_power(u, k - 2), cubed);
    return scaled(helmholtz_inverse(cubed), -0.5 * (k - 1));
}

Field rhs(const Field& u, const ModelParams& mp) {
    const Field ux = derivative(u);
    if (mp.variant == Variant::DP) {
        const Field transport = product(u, ux);
        const Field nonlocal = derivative(helmholtz_inverse(product(u, u)));
        Field out(u.grid);
        for (int i = 0; i < out.size(); ++i) out[i] = -transport[i] - 1.5 * nonlocal[i];
        return out;
    }

    const int k = mp.k;
    const Field uk = int_power(u, k);
    const Field transport = product(uk, ux);

    // P(u), reusing uk for u^{k+1}
    Field quad = product(ux, ux);
    if (k >= 2) quad = product(int_power(u, k - 1), quad);
    Field parg = sum(scaled(std::move(quad), 0.5 * (2 * k - 1)), product(uk, u));
    const Field p = scaled(derivative(helmholtz_inverse(parg)), -1.0);

    Field out(u.grid);
    if (k >= 2) {
        const Field q = q_term(u, k);
        for (int i = 0; i < out.size(); ++i) out[i] = -transport[i] + p[i] + q[i];
    } else {
        for (int i = 0; i < out.size(); ++i) out[i] = -transport[i] + p[i];
    }
    return out;
}

Field v0(const Field& u0, const ModelParams& mp) {
    if (mp.variant != Variant::GCHN)
        throw std::invalid_argument("v0: defined for the GCHN variant");
    return rhs(u0, mp);
}

double m_residual(const Trajectory& traj, int index, const ModelParams& mp) {
    const int len = static_cast<int>(traj.states.size());
    if (index < 1 || index > len - 2)
        throw std::out_of_range("m_residual: centered difference needs interior index");

    auto m_of = [](const Field& u) {
        const Field uxx = derivative(derivative(u));
        Field m(u.grid);
        for (int i = 0; i < m.size(); ++i) m[i] = u[i] - uxx[i];
        return m;
    };

    const Field& u = traj.states[index];
    const Field m = m_of(u);
    const Field m_prev = m_of(traj.states[index - 1]);
    const Field m_next = m_of(traj.states[index + 1]);
    const double dt2 = traj.times[index + 1] - traj.times[index - 1];

    const int k = mp.k;
    const Field uk = int_power(u, k);
    const Field mx = derivative(m);
    const Field ux = derivative(u);
    Field stretch = product(ux, m); // (k+1) u^{k-1} u_x m
    if (k >= 2) stretch = product(int_power(u, k - 1), stretch);
    const Field adv = product(uk, mx);

    Field res(u.grid);
    for (int i = 0; i < res.size(); ++i)
        res[i] = (m_next[i] - m_prev[i]) / dt2 + adv[i] + (k + 1) * stretch[i];

    const double denom = lp_norm(m, 2.0);
    return denom > 0.0 ? lp_norm(res, 2.0) / denom : lp_norm(res, 2.0);
}

} // namespace gchn
