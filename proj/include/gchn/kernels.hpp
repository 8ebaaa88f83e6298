#pragma once
// Data-parallel inner loops: scalar reference kernels plus SIMD variants
// selected once at startup. Everything above this layer is arithmetic on
// whole arrays; everything below is a straight loop.

#include <complex>
#include <cstddef>
#include <string_view>

namespace gchn::kernels {

struct Ops {
    // c[i] *= m[i], complex-by-real multiplier application
    void (*mul_complex_real)(std::complex<double>* c, const double* m, std::size_t n);
    // out[i] = a[i] * b[i]
    void (*mul_real)(double* out, const double* a, const double* b, std::size_t n);
    // out[i] = x[i] + a * d[i]
    void (*axpy)(double* out, const double* x, double a, const double* d, std::size_t n);
    // out[i] = u[i] + c1*k1[i] + c2*k2[i] + c3*k3[i] + c4*k4[i]  (RK4 combine)
    void (*combine4)(double* out, const double* u, double c1, const double* k1,
                     double c2, const double* k2, double c3, const double* k3,
                     double c4, const double* k4, std::size_t n);
    double (*sum_sq)(const double* a, std::size_t n);
    double (*sum_abs)(const double* a, std::size_t n);
    double (*max_abs)(const double* a, std::size_t n);
    // sum |a[i]|^p, general p (scalar in all variants; pow dominates)
    double (*sum_abs_pow)(const double* a, double p, std::size_t n);

    std::string_view name;
};

// Scalar reference implementation; always available.
const Ops& scalar();

// Best implementation for the running CPU (AVX2 on x86-64 when supported,
// otherwise scalar). Selected once, thread-safe.
const Ops& active();

} // namespace gchn::kernels
