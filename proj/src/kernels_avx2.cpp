#if defined(SPIKED_HAVE_AVX2)

#include <immintrin.h>

#include <cstddef>

namespace spiked::kernels::detail {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double weighted_dot_avx2(const double* w, const double* a, const double* b,
                         std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), ab, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void recurrence_step_avx2(const double* x, const double* cur,
                          const double* prev, double* out, std::size_t n,
                          double s, double c0, double c1, double c2) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d v0 = _mm256_set1_pd(c0);
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v2 = _mm256_set1_pd(c2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + i), v0);
    t = _mm256_mul_pd(t, _mm256_loadu_pd(cur + i));
    t = _mm256_fmadd_pd(v1, _mm256_loadu_pd(prev + i), t);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(t, v2));
  }
  for (; i < n; ++i)
    out[i] = ((s * x[i] + c0) * cur[i] + c1 * prev[i]) * c2;
}

}  // namespace spiked::kernels::detail

#endif  // SPIKED_HAVE_AVX2
