#include "spiked/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spiked/types.hpp"

namespace spiked::eigen {

namespace {

// Gershgorin bounds from diag and |off| = sqrt(|off2|).
std::pair<double, double> spectrum_bounds(const std::vector<double>& d,
                                          const std::vector<double>& off2) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::sqrt(std::fabs(off2[i - 1]));
    if (i + 1 < n) r += std::sqrt(std::fabs(off2[i]));
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  return {lo, hi};
}

}  // namespace

int sturm_count(const std::vector<double>& diag,
                const std::vector<double>& off2, double y) {
  const std::size_t n = diag.size();
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < n; ++i) {
    double num = (i == 0) ? 0.0 : off2[i - 1];
    q = diag[i] - y - num / q;
    if (q == 0.0) q = -tiny;  // treat an exact pivot zero as "just below"
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_eigenvalues_sq(const std::vector<double>& diag,
                                           const std::vector<double>& off2) {
  const std::size_t n = diag.size();
  if (off2.size() + 1 != n && !(n == 0 && off2.empty()))
    throw error(errc::bad_argument, "off2 must have diag.size()-1 entries");
  for (double v : off2)
    if (v < 0.0)
      throw error(errc::nonreal_offdiagonal,
                  "negative squared off-diagonal entry");
  std::vector<double> ev(n);
  if (n == 0) return ev;
  auto [glo, ghi] = spectrum_bounds(diag, off2);
  const double span = std::max(ghi - glo, 1.0);
  const double tol =
      4.0 * std::numeric_limits<double>::epsilon() *
      std::max({std::fabs(glo), std::fabs(ghi), 1.0});
  for (std::size_t k = 0; k < n; ++k) {
    double lo = glo - 1e-3 * span, hi = ghi + 1e-3 * span;
    // invariant: count(lo) <= k < count(hi)
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(diag, off2, mid) <= static_cast<int>(k))
        lo = mid;
      else
        hi = mid;
    }
    ev[k] = 0.5 * (lo + hi);
  }
  return ev;
}

std::vector<double> tridiag_eigenvalues(const SymTridiag& T) {
  std::vector<double> off2(T.off.size());
  for (std::size_t i = 0; i < T.off.size(); ++i) off2[i] = T.off[i] * T.off[i];
  return tridiag_eigenvalues_sq(T.diag, off2);
}

double char_poly(const std::vector<double>& diag,
                 const std::vector<double>& off2, double y) {
  double prev = 1.0, cur = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double num = (i == 0) ? 0.0 : off2[i - 1];
    double next = (diag[i] - y) * cur - num * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SignLogDet char_poly_scaled(const std::vector<double>& diag,
                            const std::vector<double>& off2, double y) {
  double prev = 1.0, cur = 1.0, log_scale = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double num = (i == 0) ? 0.0 : off2[i - 1];
    double next = (diag[i] - y) * cur - num * prev;
    prev = cur;
    cur = next;
    double m = std::max(std::fabs(cur), std::fabs(prev));
    if (m > 1e100 || (m > 0.0 && m < 1e-100)) {
      cur /= m;
      prev /= m;
      log_scale += std::log(m);
    }
  }
  if (cur == 0.0) return {0, -std::numeric_limits<double>::infinity()};
  return {cur > 0.0 ? 1 : -1, std::log(std::fabs(cur)) + log_scale};
}

SymTridiag dense_to_tridiag(const std::vector<double>& A, std::size_t n) {
  if (A.size() != n * n)
    throw error(errc::bad_argument, "dense matrix size mismatch");
  std::vector<double> a = A;
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  SymTridiag T;
  T.diag.resize(n);
  if (n == 0) return T;
  T.off.resize(n - 1);

  std::vector<double> v(n), p(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Householder vector annihilating column k below row k+1.
    double scale = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) scale += std::fabs(at(i, k));
    if (scale == 0.0) {
      T.off[k] = 0.0;
      continue;
    }
    double sigma = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = at(i, k) / scale;
      sigma += v[i] * v[i];
    }
    double alpha = std::sqrt(sigma);
    if (v[k + 1] > 0.0) alpha = -alpha;
    T.off[k] = scale * alpha;
    double beta = sigma - v[k + 1] * alpha;
    v[k + 1] -= alpha;
    if (beta == 0.0) continue;

    // A <- (I - vv^T/beta) A (I - vv^T/beta) on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
      p[i] = s / beta;
    }
    double kk = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) kk += v[i] * p[i];
    kk /= 2.0 * beta;
    for (std::size_t i = k + 1; i < n; ++i) w[i] = p[i] - kk * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) -= v[i] * w[j] + w[i] * v[j];
  }
  for (std::size_t i = 0; i < n; ++i) T.diag[i] = at(i, i);
  if (n >= 2) T.off[n - 2] = at(n - 1, n - 2);
  return T;
}

std::vector<double> dense_eigenvalues(const std::vector<double>& A,
                                      std::size_t n) {
  return tridiag_eigenvalues(dense_to_tridiag(A, n));
}

}  // namespace spiked::eigen
