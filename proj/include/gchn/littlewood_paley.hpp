#pragma once
// Dyadic frequency blocks and Besov norms. The low cutoff chi equals 1 on
// {|xi| <= 3/4} and vanishes on {|xi| >= 4/3}; the annulus functions come
// from the telescoping phi_j(xi) = chi(xi/2^{j+1}) - chi(xi/2^j), which makes
// chi + sum_j phi_j = 1 identically below (3/4)*2^{j_max}.

#include <limits>
#include <vector>

#include "gchn/field.hpp"

namespace gchn {

// exp(-1/t) glue: 1 for t <= 0, 0 for t >= 1, smooth in between.
double smooth_step_down(double t);
// The low-frequency cutoff as a function of |xi|.
double chi_cutoff(double xi);

struct BesovParams {
    double s = 2.0;
    double p = 2.0;
    double r = std::numeric_limits<double>::infinity();
};

class LPFamily {
public:
    explicit LPFamily(GridPtr grid);

    const GridPtr& grid() const { return grid_; }
    int j_max() const { return j_max_; }

    // Multiplier samples at xi_m, m = 0..N/2. Level -1 is chi.
    const std::vector<double>& multiplier(int j) const;

private:
    GridPtr grid_;
    int j_max_;
    std::vector<std::vector<double>> mult_; // [j+1] for j = -1..j_max
};

// Dyadic block: zero for j <= -2, chi(D) for j = -1, phi(2^{-j} D) for j >= 0.
Field block(const Field& f, int j, const LPFamily& fam);

// r = inf: sup over j of 2^{sj}||block(f,j)||_p; finite r: the l^r sum.
double besov_norm(const Field& f, const BesovParams& bp, const LPFamily& fam);

// [Delta_j, v] d_x f = Delta_j(v f_x) - v Delta_j(f_x), products dealiased.
Field commutator(const Field& v, const Field& f, int j, const LPFamily& fam);

} // namespace gchn
