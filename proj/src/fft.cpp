#include "gchn/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace gchn::fft {
namespace {

struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

Plans& plans_for(int n) {
    static std::unordered_map<int, Plans> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Scratch arrays are only used at planning time; execution goes through
    // the new-array interface, hence FFTW_UNALIGNED.
    std::vector<double> real(n);
    std::vector<std::complex<double>> cplx(n / 2 + 1);
    auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
    Plans p;
    p.r2c = fftw_plan_dft_r2c_1d(n, real.data(), c, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_1d(n, c, real.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED | FFTW_PRESERVE_INPUT);
    return cache.emplace(n, p).first->second;
}

} // namespace

std::vector<std::complex<double>> rfft(const double* in, int n) {
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_execute_dft_r2c(plans_for(n).r2c, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

void irfft(const std::complex<double>* half, int n, double* out) {
    fftw_execute_dft_c2r(plans_for(n).c2r,
                         reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(half)),
                         out);
}

} // namespace gchn::fft
