#pragma once
// Thin FFTW wrapper: unnormalized real-to-complex transforms with a
// process-wide plan cache. Plan creation is serialized; execution uses the
// new-array interface and is safe to call concurrently.

#include <complex>
#include <vector>

namespace gchn::fft {

// out has n/2+1 entries; out[m] = sum_j in[j] * exp(-2*pi*i*m*j/n).
std::vector<std::complex<double>> rfft(const double* in, int n);

// Inverse of rfft up to a factor n: irfft(rfft(v)) == n*v. half must have
// n/2+1 entries; the imaginary parts of half[0] and half[n/2] are ignored.
void irfft(const std::complex<double>* half, int n, double* out);

} // namespace gchn::fft
