#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "gchn/kernels.hpp"

using namespace gchn;

namespace {

std::vector<double> randvec(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

} // namespace

// The active (possibly SIMD) kernels must agree with the scalar reference on
// awkward lengths that exercise the vector tails.
TEST_CASE("active kernels match scalar reference") {
    const auto& s = kernels::scalar();
    const auto& a = kernels::active();
    INFO("active kernel set: ", a.name);
    std::mt19937 rng(20240817);

    for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1021u, 4096u}) {
        const auto x = randvec(rng, n), y = randvec(rng, n), z = randvec(rng, n),
                   w = randvec(rng, n), u = randvec(rng, n);

        std::vector<double> r1(n), r2(n);
        s.mul_real(r1.data(), x.data(), y.data(), n);
        a.mul_real(r2.data(), x.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(r1[i] == doctest::Approx(r2[i]).epsilon(1e-15));

        s.axpy(r1.data(), x.data(), 0.37, y.data(), n);
        a.axpy(r2.data(), x.data(), 0.37, y.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(r1[i] == doctest::Approx(r2[i]).epsilon(1e-15));

        s.combine4(r1.data(), x.data(), 0.1, y.data(), 0.2, z.data(), 0.3, w.data(),
                   0.4, u.data(), n);
        a.combine4(r2.data(), x.data(), 0.1, y.data(), 0.2, z.data(), 0.3, w.data(),
                   0.4, u.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(r1[i] == doctest::Approx(r2[i]).epsilon(1e-15));

        CHECK(s.sum_sq(x.data(), n) == doctest::Approx(a.sum_sq(x.data(), n)).epsilon(1e-13));
        CHECK(s.sum_abs(x.data(), n) == doctest::Approx(a.sum_abs(x.data(), n)).epsilon(1e-13));
        CHECK(s.max_abs(x.data(), n) == a.max_abs(x.data(), n));
        CHECK(s.sum_abs_pow(x.data(), 2.7, n) ==
              doctest::Approx(a.sum_abs_pow(x.data(), 2.7, n)).epsilon(1e-13));

        std::vector<std::complex<double>> c1(n), c2(n);
        for (std::size_t i = 0; i < n; ++i) c1[i] = c2[i] = {x[i], y[i]};
        s.mul_complex_real(c1.data(), z.data(), n);
        a.mul_complex_real(c2.data(), z.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(c1[i].real() == doctest::Approx(c2[i].real()).epsilon(1e-15));
            CHECK(c1[i].imag() == doctest::Approx(c2[i].imag()).epsilon(1e-15));
        }
    }
}
