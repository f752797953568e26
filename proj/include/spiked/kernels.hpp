#pragma once

#include <cstddef>

namespace spiked::kernels {

enum class backend { scalar, avx2, neon };

// Backend in use for all kernel calls. Auto-detected at first use.
backend active_backend();

// Force a backend (mainly for equivalence testing). Returns false and leaves
// the active backend unchanged if the requested one is unsupported here.
bool set_backend(backend b);

const char* backend_name(backend b);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i w[i]*a[i]*b[i]
double weighted_dot(const double* w, const double* a, const double* b,
                    std::size_t n);

// y[i] += alpha*x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// out[i] = ((s*x[i] + c0)*cur[i] + c1*prev[i]) * c2
// One step of a three-term recurrence applied across a whole grid; serves both
// the Bessel-polynomial recursion (s = 2) and the orthonormal Laguerre
// recursion (s = 1). `out` may not alias `x`, `cur` or `prev`.
void recurrence_step(const double* x, const double* cur, const double* prev,
                     double* out, std::size_t n, double s, double c0, double c1,
                     double c2);

}  // namespace spiked::kernels
