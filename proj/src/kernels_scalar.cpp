#include "gchn/kernels.hpp"

#include <cmath>

namespace gchn::kernels {
namespace {

void mul_complex_real_s(std::complex<double>* c, const double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) c[i] *= m[i];
}

void mul_real_s(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy_s(double* out, const double* x, double a, const double* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * d[i];
}

void combine4_s(double* out, const double* u, double c1, const double* k1,
                double c2, const double* k2, double c3, const double* k3,
                double c4, const double* k4, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = u[i] + c1 * k1[i] + c2 * k2[i] + c3 * k3[i] + c4 * k4[i];
}

double sum_sq_s(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_s(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double max_abs_s(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

double sum_abs_pow_s(const double* a, double p, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i]), p);
    return s;
}

} // namespace

const Ops& scalar() {
    static const Ops ops{mul_complex_real_s, mul_real_s, axpy_s, combine4_s,
                         sum_sq_s, sum_abs_s, max_abs_s, sum_abs_pow_s, "scalar"};
    return ops;
}

} // namespace gchn::kernels
