#include "gchn/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "gchn/spectral_ops.hpp"

namespace gchn {
namespace {

// Guarded mollifier: exp(-1/t) underflows long before t = 1e-8, the guard
// only dodges the 1/t overflow.
double g(double t) { return t > 1e-8 ? std::exp(-1.0 / t) : 0.0; }

} // namespace

double smooth_step_down(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = g(t), b = g(1.0 - t);
    return b / (a + b);
}

double chi_cutoff(double xi) {
    const double a = std::fabs(xi);
    return smooth_step_down((a - 0.75) / (4.0 / 3.0 - 0.75));
}

LPFamily::LPFamily(GridPtr grid) : grid_(std::move(grid)) {
    const double nyq = grid_->nyquist();
    j_max_ = 0;
    while (0.75 * std::ldexp(1.0, j_max_ + 1) <= nyq) ++j_max_;
    // j_max_ is now the smallest j with (3/4)*2^{j+1} > Nyquist; blocks above
    // it have no support on the grid.

    const int half = grid_->size() / 2 + 1;
    mult_.resize(j_max_ + 2);
    for (auto& m : mult_) m.resize(half);
    for (int i = 0; i < half; ++i) {
        const double xi = grid_->freq_spacing() * i;
        mult_[0][i] = chi_cutoff(xi);
        for (int j = 0; j <= j_max_; ++j) {
            const double s = std::ldexp(1.0, -j);
            mult_[j + 1][i] = chi_cutoff(xi * s * 0.5) - chi_cutoff(xi * s);
        }
    }
}

const std::vector<double>& LPFamily::multiplier(int j) const {
    if (j < -1 || j > j_max_) throw std::out_of_range("LPFamily: level out of range");
    return mult_[j + 1];
}

Field block(const Field& f, int j, const LPFamily& fam) {
    if (!f.grid->same_as(*fam.grid().get()))
        throw std::invalid_argument("block: field and family on different grids");
    if (j <= -2 || j > fam.j_max()) return Field(f.grid);
    return apply_multiplier(f, fam.multiplier(j));
}

double besov_norm(const Field& f, const BesovParams& bp, const LPFamily& fam) {
    if (bp.p < 1.0 || bp.r < 1.0)
        throw std::invalid_argument("besov_norm: p and r must be >= 1");
    const bool sup = std::isinf(bp.r);
    double acc = 0.0;
    for (int j = -1; j <= fam.j_max(); ++j) {
        const double term = std::pow(2.0, bp.s * j) * lp_norm(block(f, j, fam), bp.p);
        if (sup)
            acc = std::max(acc, term);
        else
            acc += std::pow(term, bp.r);
    }
    return sup ? acc : std::pow(acc, 1.0 / bp.r);
}

Field commutator(const Field& v, const Field& f, int j, const LPFamily& fam) {
    require_same_grid(v, f);
    const Field fx = derivative(f);
    const Field a = block(product(v, fx), j, fam);
    const Field b = product(v, block(fx, j, fam));
    Field out(f.grid);
    for (int i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

} // namespace gchn
