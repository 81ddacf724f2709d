#include "isoflat/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace isoflat::simd {

namespace {

bool want_avx2() {
    const char* env = std::getenv("ISOFLAT_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return false;
        if (std::strcmp(env, "avx2") == 0) return true;
        // anything else (incl. "auto") falls through to the CPU check
    }
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Binding {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*xpby)(const double*, double, double*, std::size_t);
    void (*mul)(const double*, const double*, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    std::string name;
};

Binding select() {
    if (want_avx2())
        return {avx2::dot, avx2::axpy, avx2::xpby, avx2::mul, avx2::max_abs, "avx2"};
    return {scalar::dot, scalar::axpy, scalar::xpby, scalar::mul, scalar::max_abs, "scalar"};
}

const Binding bound = select();

} // namespace

double (*dot)(const double*, const double*, std::size_t) = bound.dot;
void (*axpy)(double, const double*, double*, std::size_t) = bound.axpy;
void (*xpby)(const double*, double, double*, std::size_t) = bound.xpby;
void (*mul)(const double*, const double*, double*, std::size_t) = bound.mul;
double (*max_abs)(const double*, std::size_t) = bound.max_abs;

const std::string& active_variant() { return bound.name; }

} // namespace isoflat::simd
