#include "spiked/kernels.hpp"

#include <cstdlib>

namespace spiked::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot_scalar(const double* w, const double* a, const double* b,
                           std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void recurrence_step_scalar(const double* x, const double* cur,
                            const double* prev, double* out, std::size_t n,
                            double s, double c0, double c1, double c2) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = ((s * x[i] + c0) * cur[i] + c1 * prev[i]) * c2;
}

struct Vtable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*wdot)(const double*, const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rstep)(const double*, const double*, const double*, double*,
                std::size_t, double, double, double, double);
};

constexpr Vtable scalar_vt{dot_scalar, weighted_dot_scalar, axpy_scalar,
                           recurrence_step_scalar};

}  // namespace

#if defined(SPIKED_HAVE_AVX2)
namespace detail {
double dot_avx2(const double*, const double*, std::size_t);
double weighted_dot_avx2(const double*, const double*, const double*,
                         std::size_t);
void axpy_avx2(double, const double*, double*, std::size_t);
void recurrence_step_avx2(const double*, const double*, const double*, double*,
                          std::size_t, double, double, double, double);
}  // namespace detail
#endif

#if defined(SPIKED_HAVE_NEON)
namespace detail {
double dot_neon(const double*, const double*, std::size_t);
double weighted_dot_neon(const double*, const double*, const double*,
                         std::size_t);
void axpy_neon(double, const double*, double*, std::size_t);
void recurrence_step_neon(const double*, const double*, const double*, double*,
                          std::size_t, double, double, double, double);
}  // namespace detail
#endif

namespace {

bool host_supports(backend b) {
  switch (b) {
    case backend::scalar:
      return true;
    case backend::avx2:
#if defined(SPIKED_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case backend::neon:
#if defined(SPIKED_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Vtable* vtable_for(backend b) {
  switch (b) {
#if defined(SPIKED_HAVE_AVX2)
    case backend::avx2: {
      static constexpr Vtable vt{detail::dot_avx2, detail::weighted_dot_avx2,
                                 detail::axpy_avx2,
                                 detail::recurrence_step_avx2};
      return &vt;
    }
#endif
#if defined(SPIKED_HAVE_NEON)
    case backend::neon: {
      static constexpr Vtable vt{detail::dot_neon, detail::weighted_dot_neon,
                                 detail::axpy_neon,
                                 detail::recurrence_step_neon};
      return &vt;
    }
#endif
    default:
      return &scalar_vt;
  }
}

struct State {
  backend which;
  const Vtable* vt;
};

bool scalar_forced() {
  const char* f = std::getenv("SPIKED_FORCE_SCALAR");
  return f != nullptr && f[0] != '\0' && !(f[0] == '0' && f[1] == '\0');
}

State& state() {
  static State s = [] {
    backend b = backend::scalar;
    if (!scalar_forced()) {
      if (host_supports(backend::avx2))
        b = backend::avx2;
      else if (host_supports(backend::neon))
        b = backend::neon;
    }
    return State{b, vtable_for(b)};
  }();
  return s;
}

}  // namespace

backend active_backend() { return state().which; }

bool set_backend(backend b) {
  if (!host_supports(b)) return false;
  state() = State{b, vtable_for(b)};
  return true;
}

const char* backend_name(backend b) {
  switch (b) {
    case backend::scalar:
      return "scalar";
    case backend::avx2:
      return "avx2";
    case backend::neon:
      return "neon";
  }
  return "?";
}

double dot(const double* a, const double* b, std::size_t n) {
  return state().vt->dot(a, b, n);
}

double weighted_dot(const double* w, const double* a, const double* b,
                    std::size_t n) {
  return state().vt->wdot(w, a, b, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  state().vt->axpy(alpha, x, y, n);
}

void recurrence_step(const double* x, const double* cur, const double* prev,
                     double* out, std::size_t n, double s, double c0, double c1,
                     double c2) {
  state().vt->rstep(x, cur, prev, out, n, s, c0, c1, c2);
}

}  // namespace spiked::kernels
