#pragma once

#include <cstddef>
#include <string>

// Dense double-precision kernels for the elliptic solver and field
// reductions. A scalar reference implementation always exists; an AVX2+FMA
// variant is selected at runtime when the CPU supports it. Dispatch can be
// forced with ISOFLAT_SIMD=scalar|avx2|auto (read once per process).
//
// The SIMD variants may reassociate sums and contract multiply-adds, so
// reductions agree with the scalar reference only up to a few ulps. Within a
// process the selected variant is fixed, which keeps runs reproducible.

namespace isoflat::simd {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);          // y += alpha*x
void xpby(const double* x, double beta, double* y, std::size_t n);           // y = x + beta*y
void mul(const double* a, const double* b, double* out, std::size_t n);      // out = a.*b
double max_abs(const double* a, std::size_t n);
} // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void xpby(const double* x, double beta, double* y, std::size_t n);
void mul(const double* a, const double* b, double* out, std::size_t n);
double max_abs(const double* a, std::size_t n);
} // namespace avx2

// Dispatched entry points (function pointers bound on first use).
extern double (*dot)(const double*, const double*, std::size_t);
extern void (*axpy)(double, const double*, double*, std::size_t);
extern void (*xpby)(const double*, double, double*, std::size_t);
extern void (*mul)(const double*, const double*, double*, std::size_t);
extern double (*max_abs)(const double*, std::size_t);

/// Name of the active variant ("scalar" or "avx2").
const std::string& active_variant();

} // namespace isoflat::simd
