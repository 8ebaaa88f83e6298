// AVX2 variants of the inner-loop kernels. Compiled with -mavx2 -mfma and
// reached only through the runtime dispatch in kernels.cpp, so the binary
// stays runnable on non-AVX2 hosts.

#include "gchn/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <cmath>
#include <immintrin.h>

namespace gchn::kernels {
namespace {

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

void mul_complex_real_v(std::complex<double>* c, const double* m, std::size_t n) {
    double* cd = reinterpret_cast<double*>(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d cv = _mm256_loadu_pd(cd + 2 * i);
        __m128d mv = _mm_loadu_pd(m + i);
        // duplicate each multiplier across its re/im pair
        __m256d mm = _mm256_permute4x64_pd(_mm256_castpd128_pd256(mv), 0x50);
        _mm256_storeu_pd(cd + 2 * i, _mm256_mul_pd(cv, mm));
    }
    for (; i < n; ++i) c[i] *= m[i];
}

void mul_real_v(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_v(double* out, const double* x, double a, const double* d, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i,
                         _mm256_fmadd_pd(av, _mm256_loadu_pd(d + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = std::fma(a, d[i], x[i]);
}

void combine4_v(double* out, const double* u, double c1, const double* k1,
                double c2, const double* k2, double c3, const double* k3,
                double c4, const double* k4, std::size_t n) {
    const __m256d v1 = _mm256_set1_pd(c1), v2 = _mm256_set1_pd(c2);
    const __m256d v3 = _mm256_set1_pd(c3), v4 = _mm256_set1_pd(c4);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(u + i);
        acc = _mm256_fmadd_pd(v1, _mm256_loadu_pd(k1 + i), acc);
        acc = _mm256_fmadd_pd(v2, _mm256_loadu_pd(k2 + i), acc);
        acc = _mm256_fmadd_pd(v3, _mm256_loadu_pd(k3 + i), acc);
        acc = _mm256_fmadd_pd(v4, _mm256_loadu_pd(k4 + i), acc);
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i)
        out[i] = u[i] + c1 * k1[i] + c2 * k2[i] + c3 * k3[i] + c4 * k4[i];
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum_sq_v(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_v(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double max_abs_v(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    lo = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

double sum_abs_pow_v(const double* a, double p, std::size_t n) {
    // pow dominates; no vector win here, reuse the straight loop
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i]), p);
    return s;
}

} // namespace

const Ops& avx2() {
    static const Ops ops{mul_complex_real_v, mul_real_v, axpy_v, combine4_v,
                         sum_sq_v, sum_abs_v, max_abs_v, sum_abs_pow_v, "avx2"};
    return ops;
}

} // namespace gchn::kernels

#endif // x86-64
