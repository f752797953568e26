#include "spiked/orthopoly.hpp"

#include <cmath>
#include <cstddef>

#include "spiked/eigen.hpp"
#include "spiked/types.hpp"

namespace spiked::orthopoly {

double pochhammer(double x, int n) {
  if (n < 0) throw error(errc::bad_argument, "pochhammer: n must be >= 0");
  double p = 1.0;
  for (int j = 0; j < n; ++j) p *= x + j;
  return p;
}

double bessel_eval(double mu, int n, double x) {
  if (n < 0) throw error(errc::bad_argument, "bessel_eval: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + 2.0 * (mu + 1.0) * x;
  for (int m = 1; m < n; ++m) {
    double c0 = mu / ((m + mu) * (m + mu + 1.0));
    double c1 = m / ((m + mu) * (2.0 * m + 2.0 * mu + 1.0));
    double c2 = (m + mu + 1.0) * (2.0 * m + 2.0 * mu + 1.0) /
                (m + 2.0 * mu + 1.0);
    double next = ((2.0 * x + c0) * cur + c1 * prev) * c2;
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_eval_series(double mu, int n, double x) {
  if (n < 0) throw error(errc::bad_argument, "bessel_eval: n must be >= 0");
  double term = 1.0, sum = 1.0;
  for (int j = 0; j < n; ++j) {
    term *= (-(n - j)) * (n + 2.0 * mu + 1.0 + j) / (j + 1.0) * (-x);
    sum += term;
  }
  return sum;
}

double bessel_eval_laguerre(double mu, int n, double x) {
  if (!(x > 0.0))
    throw error(errc::bad_argument, "bessel_eval_laguerre: x must be > 0");
  double fact = 1.0, pw = 1.0;
  for (int j = 1; j <= n; ++j) {
    fact *= j;
    pw *= -x;
  }
  return fact * pw * laguerre_eval(n, -(2.0 * n + 2.0 * mu + 1.0), 1.0 / x);
}

std::vector<double> bessel_sequence(double mu, int nmax, double x) {
  if (nmax < 0)
    throw error(errc::bad_argument, "bessel_sequence: nmax must be >= 0");
  std::vector<double> y(static_cast<std::size_t>(nmax) + 1);
  y[0] = 1.0;
  if (nmax == 0) return y;
  y[1] = 1.0 + 2.0 * (mu + 1.0) * x;
  for (int m = 1; m < nmax; ++m) {
    double c0 = mu / ((m + mu) * (m + mu + 1.0));
    double c1 = m / ((m + mu) * (2.0 * m + 2.0 * mu + 1.0));
    double c2 = (m + mu + 1.0) * (2.0 * m + 2.0 * mu + 1.0) /
                (m + 2.0 * mu + 1.0);
    y[m + 1] = ((2.0 * x + c0) * y[m] + c1 * y[m - 1]) * c2;
  }
  return y;
}

double bessel_norm(double mu, int n) {
  if (n < 0) throw error(errc::bad_argument, "bessel_norm: n must be >= 0");
  if (!(mu < -n - 0.5))
    throw error(errc::bad_argument,
                "bessel_norm: requires mu < -n - 1/2 for orthogonality");
  // -n! Gamma(-n-2mu) / (2n+2mu+1); the denominator is negative here.
  double log_mag = std::lgamma(n + 1.0) + std::lgamma(-n - 2.0 * mu);
  return std::exp(log_mag) / (-(2.0 * n + 2.0 * mu + 1.0));
}

double laguerre_eval(int n, double alpha, double x) {
  if (n < 0) throw error(errc::bad_argument, "laguerre_eval: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadRule gauss_laguerre_rule(double alpha, int npts) {
  if (!(alpha > -1.0))
    throw error(errc::bad_argument,
                "gauss_laguerre_rule: weight x^alpha needs alpha > -1");
  if (npts < 1)
    throw error(errc::bad_argument, "gauss_laguerre_rule: npts must be >= 1");

  // Jacobi matrix of the monic Laguerre family.
  eigen::SymTridiag J;
  J.diag.resize(npts);
  J.off.resize(npts - 1);
  for (int i = 0; i < npts; ++i) J.diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < npts; ++i)
    J.off[i - 1] = std::sqrt(i * (i + alpha));

  QuadRule rule;
  rule.x = eigen::tridiag_eigenvalues(J);
  rule.w.resize(npts);
  rule.log_w.resize(npts);

  const double lg = std::lgamma(alpha + 1.0);
  for (int i = 0; i < npts; ++i) {
    // Christoffel weight: w = 1 / sum_j p_j(x_i)^2 over the orthonormal
    // family, accumulated with periodic rescaling so large rules cannot
    // overflow the partial sums.
    const double xi = rule.x[i];
    double prev = 0.0;
    double cur = std::exp(-0.5 * lg);
    double acc = cur * cur;
    double log_rescale = 0.0;
    for (int j = 0; j + 1 < npts; ++j) {
      double next = ((xi - J.diag[j]) * cur - (j > 0 ? J.off[j - 1] : 0.0) *
                     prev) / J.off[j];
      prev = cur;
      cur = next;
      acc += cur * cur;
      if (acc > 1e250) {
        const double s = 1e-125;
        cur *= s;
        prev *= s;
        acc *= s * s;
        log_rescale += 2.0 * std::log(1e125);
      }
    }
    rule.log_w[i] = -(std::log(acc) + log_rescale);
    rule.w[i] = std::exp(rule.log_w[i]);
  }
  return rule;
}

}  // namespace spiked::orthopoly
