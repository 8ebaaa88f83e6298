#pragma once
// Fourier-multiplier operators, dealiased products and quadrature norms.

#include <span>

#include "gchn/field.hpp"

namespace gchn {

// Transform pair in the coefficient-of-exp(i*xi_m*x) convention:
// forward(f).coeffs[index_of_mode(m)] is the amplitude of exp(i*xi_m*x),
// so cos(q*x) with q on the lattice yields 1/2 at each of +/-q.
SpectralField forward(const Field& f);
// Reconstructs the real field; assumes Hermitian coefficients (real data).
Field inverse(const SpectralField& f);

// Applies a real even multiplier given by its samples at xi_m, m = 0..N/2.
Field apply_multiplier(const Field& f, std::span<const double> mult_half);

// d/dx via the i*xi multiplier; the unpaired Nyquist mode is zeroed.
Field derivative(const Field& f);

// (1 - d^2/dx^2)^{-1} via the 1/(1+xi^2) multiplier.
Field helmholtz_inverse(const Field& f);

// Pointwise product of 2..4 factors, each pairwise multiplication dealiased
// on a 3N/2 zero-padded grid (3/2 rule per pairwise product).
Field product(std::span<const Field> factors);
Field product(const Field& a, const Field& b);

// u^k by left-folded dealiased pairwise products; k >= 1.
Field int_power(const Field& u, int k);

// (h * sum |f_j|^p)^{1/p} for finite p; grid max for p = infinity.
double lp_norm(const Field& f, double p);

// sqrt(||u||_2^2 + ||u_x||_2^2)
double h1_norm(const Field& u);

bool all_finite(const Field& f);

} // namespace gchn
