#include "gchn/kernels.hpp"

#include <cstdlib>

namespace gchn::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2(); // kernels_avx2.cpp
#endif

namespace {

const Ops& select() {
    // GCHN_KERNELS=scalar forces the reference path (useful when bisecting)
    if (const char* env = std::getenv("GCHN_KERNELS"); env && std::string_view(env) == "scalar")
        return scalar();
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2();
#endif
    return scalar();
}

} // namespace

const Ops& active() {
    static const Ops& ops = select();
    return ops;
}

} // namespace gchn::kernels
