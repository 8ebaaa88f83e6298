#include "gchn/spectral_ops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gchn/fft.hpp"
#include "gchn/kernels.hpp"

namespace gchn {
namespace {

// (-1)^m phase: the grid origin sits at x = -L, half a period off the FFT's
// j = 0 sample, which shows up as an alternating sign on the coefficients.
inline double phase(int m) { return (m & 1) ? -1.0 : 1.0; }

} // namespace

SpectralField forward(const Field& f) {
    const int n = f.size();
    auto half = fft::rfft(f.values.data(), n);
    SpectralField out(f.grid);
    const double scale = 1.0 / n;
    for (int m = 0; m <= n / 2; ++m) {
        const std::complex<double> c = half[m] * (phase(m) * scale);
        out.coeffs[m] = c;
        if (m > 0 && m < n / 2) out.coeffs[n - m] = std::conj(c);
    }
    return out;
}

Field inverse(const SpectralField& f) {
    const int n = f.size();
    std::vector<std::complex<double>> half(n / 2 + 1);
    for (int m = 0; m <= n / 2; ++m) half[m] = f.coeffs[m] * phase(m);
    Field out(f.grid);
    fft::irfft(half.data(), n, out.values.data());
    return out;
}

Field apply_multiplier(const Field& f, std::span<const double> mult_half) {
    const int n = f.size();
    auto half = fft::rfft(f.values.data(), n);
    kernels::active().mul_complex_real(half.data(), mult_half.data(), half.size());
    Field out(f.grid);
    fft::irfft(half.data(), n, out.values.data());
    const double scale = 1.0 / n;
    for (double& v : out.values) v *= scale;
    return out;
}

Field derivative(const Field& f) {
    const int n = f.size();
    auto half = fft::rfft(f.values.data(), n);
    const double dxi = f.grid->freq_spacing();
    for (int m = 0; m < n / 2; ++m)
        half[m] *= std::complex<double>(0.0, dxi * m);
    half[n / 2] = 0.0; // no conjugate partner
    Field out(f.grid);
    fft::irfft(half.data(), n, out.values.data());
    const double scale = 1.0 / n;
    for (double& v : out.values) v *= scale;
    return out;
}

Field helmholtz_inverse(const Field& f) {
    const int n = f.size();
    std::vector<double> mult(n / 2 + 1);
    for (int m = 0; m <= n / 2; ++m) {
        const double xi = f.grid->freq_spacing() * m;
        mult[m] = 1.0 / (1.0 + xi * xi);
    }
    return apply_multiplier(f, mult);
}

Field product(const Field& a, const Field& b) {
    require_same_grid(a, b);
    const int n = a.size();
    const int np = 3 * n / 2;

    auto ha = fft::rfft(a.values.data(), n);
    auto hb = fft::rfft(b.values.data(), n);

    // Zero-pad to 3N/2 modes; the coarse Nyquist coefficient becomes an
    // interior mode and must carry half weight to keep the samples.
    auto pad = [&](const std::vector<std::complex<double>>& h) {
        std::vector<std::complex<double>> hp(np / 2 + 1);
        for (int m = 0; m < n / 2; ++m) hp[m] = h[m];
        hp[n / 2] = 0.5 * h[n / 2].real();
        return hp;
    };
    auto hpa = pad(ha), hpb = pad(hb);

    std::vector<double> pa(np), pb(np);
    fft::irfft(hpa.data(), np, pa.data());
    fft::irfft(hpb.data(), np, pb.data());
    const double scale = 1.0 / n; // irfft of n-scaled coefficients on the fine grid
    kernels::active().mul_real(pa.data(), pa.data(), pb.data(), np);
    for (double& v : pa) v *= scale * scale;

    auto hc = fft::rfft(pa.data(), np);
    std::vector<std::complex<double>> hd(n / 2 + 1);
    const double back = 1.0 / np;
    for (int m = 0; m < n / 2; ++m) hd[m] = hc[m] * back;
    hd[n / 2] = 0.0; // truncated product carries no Nyquist mode

    Field out(a.grid);
    fft::irfft(hd.data(), n, out.values.data());
    return out;
}

Field product(std::span<const Field> factors) {
    if (factors.size() < 2 || factors.size() > 4)
        throw std::invalid_argument("product: expected 2 to 4 factors");
    Field acc = product(factors[0], factors[1]);
    for (std::size_t i = 2; i < factors.size(); ++i) acc = product(acc, factors[i]);
    return acc;
}

Field int_power(const Field& u, int k) {
    if (k < 1) throw std::invalid_argument("int_power: k must be >= 1");
    Field acc = u;
    for (int i = 1; i < k; ++i) acc = product(acc, u);
    return acc;
}

double lp_norm(const Field& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    const auto& k = kernels::active();
    const auto n = f.values.size();
    const double* a = f.values.data();
    if (std::isinf(p)) return k.max_abs(a, n);
    const double h = f.grid->spacing();
    if (p == 2.0) return std::sqrt(h * k.sum_sq(a, n));
    if (p == 1.0) return h * k.sum_abs(a, n);
    return std::pow(h * k.sum_abs_pow(a, p, n), 1.0 / p);
}

double h1_norm(const Field& u) {
    const double l2 = lp_norm(u, 2.0);
    const double dl2 = lp_norm(derivative(u), 2.0);
    return std::sqrt(l2 * l2 + dl2 * dl2);
}

bool all_finite(const Field& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

} // namespace gchn
