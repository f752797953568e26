#if defined(SPIKED_HAVE_NEON)

#include <arm_neon.h>

#include <cstddef>

namespace spiked::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot_neon(const double* w, const double* a, const double* b,
                         std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ab = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc = vfmaq_f64(acc, vld1q_f64(w + i), ab);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void recurrence_step_neon(const double* x, const double* cur,
                          const double* prev, double* out, std::size_t n,
                          double s, double c0, double c1, double c2) {
  const float64x2_t vs = vdupq_n_f64(s);
  const float64x2_t v0 = vdupq_n_f64(c0);
  const float64x2_t v1 = vdupq_n_f64(c1);
  const float64x2_t v2 = vdupq_n_f64(c2);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t t = vfmaq_f64(v0, vs, vld1q_f64(x + i));
    t = vmulq_f64(t, vld1q_f64(cur + i));
    t = vfmaq_f64(t, v1, vld1q_f64(prev + i));
    vst1q_f64(out + i, vmulq_f64(t, v2));
  }
  for (; i < n; ++i)
    out[i] = ((s * x[i] + c0) * cur[i] + c1 * prev[i]) * c2;
}

}  // namespace spiked::kernels::detail

#endif  // SPIKED_HAVE_NEON
