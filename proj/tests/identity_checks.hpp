#pragma once

// Worst-deviation evaluators for the polynomial identity battery, shared by
// the unit tests and the acceptance gate. Each returns the largest relative
// (or scale-normalized) deviation over its sample set.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "spiked/orthopoly.hpp"
#include "spiked/tra.hpp"

namespace identity_checks {

namespace op = spiked::orthopoly;

inline const std::vector<double> kMus = {-4.7, -8.5, -12.3};
inline const std::vector<double> kXs = {0.1, 0.5, 1.0, 5.0};

// Recursion vs terminating series vs Laguerre connection.
inline double eval_paths() {
  double worst = 0.0;
  for (double mu : kMus)
    for (double x : kXs)
      for (int n = 0; n <= 8; ++n) {
        const double a = op::bessel_eval(mu, n, x);
        const double b = op::bessel_eval_series(mu, n, x);
        const double c = op::bessel_eval_laguerre(mu, n, x);
        const double s = std::max({std::fabs(a), std::fabs(b), 1.0});
        worst = std::max({worst, std::fabs(a - b) / s, std::fabs(a - c) / s});
      }
  return worst;
}

// Orthogonality under x^{2mu} e^{-1/x}. The substitution u = 1/x turns
// u^{n} Y_n(1/u) into n! (-1)^n L_n^{-(2n+2mu+1)}(u), so the integral becomes
// a polynomial-exact Gauss-Laguerre sum for the weight x^{-2mu-2-(n+m)} e^{-x}.
inline double orthogonality(double mu, int degree_max) {
  double worst = 0.0;
  for (int n = 0; n <= degree_max; ++n)
    for (int m = 0; m <= degree_max; ++m) {
      const double alpha = -2.0 * mu - 2.0 - (n + m);
      auto rule = op::gauss_laguerre_rule(alpha, n + m + 2);
      double s = 0.0;
      for (std::size_t i = 0; i < rule.x.size(); ++i)
        s += rule.w[i] *
             op::laguerre_eval(n, -(2.0 * n + 2.0 * mu + 1.0), rule.x[i]) *
             op::laguerre_eval(m, -(2.0 * m + 2.0 * mu + 1.0), rule.x[i]);
      double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
      for (int j = 2; j <= n; ++j) s *= j;
      for (int j = 2; j <= m; ++j) s *= j;
      s *= sign;
      const double expect = (n == m) ? op::bessel_norm(mu, n) : 0.0;
      const double scale = op::bessel_norm(mu, std::max(n, m));
      worst = std::max(worst, std::fabs(s - expect) / scale);
    }
  return worst;
}

// Differential equation x^2 Y'' + [1+2x(mu+1)] Y' - n(n+2mu+1) Y = 0 by
// five-point finite differences with step h.
inline double differential_equation(double h = 1e-4) {
  double worst = 0.0;
  for (double mu : kMus)
    for (double x : {0.5, 1.0, 2.0})
      for (int n : {2, 5}) {
        auto f = [&](double t) { return op::bessel_eval(mu, n, t); };
        const double d1 =
            (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
            (12 * h);
        const double d2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) +
                           16 * f(x - h) - f(x - 2 * h)) /
                          (12 * h * h);
        const double res = x * x * d2 + (1.0 + 2.0 * x * (mu + 1.0)) * d1 -
                           n * (n + 2.0 * mu + 1.0) * f(x);
        const double scale =
            std::max(1.0, std::fabs(n * (n + 2.0 * mu + 1.0) * f(x)));
        worst = std::max(worst, std::fabs(res) / scale);
      }
  return worst;
}

// Forward shift dY_n^mu/dx = n(n+2mu+1) Y_{n-1}^{mu+1}.
inline double forward_shift(double h = 1e-5) {
  double worst = 0.0;
  for (double mu : kMus)
    for (double x : {0.5, 1.0, 2.0})
      for (int n : {1, 3, 6}) {
        auto f = [&](double t) { return op::bessel_eval(mu, n, t); };
        const double d1 =
            (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
            (12 * h);
        const double rhs =
            n * (n + 2.0 * mu + 1.0) * op::bessel_eval(mu + 1.0, n - 1, x);
        worst =
            std::max(worst, std::fabs(d1 - rhs) / std::max(1.0, std::fabs(rhs)));
      }
  return worst;
}

// Parameter-shift identity connecting Y_{n+1}^{mu-1} to Y_{n-1,n,n+1}^mu.
inline double parameter_shift() {
  double worst = 0.0;
  for (double mu : kMus)
    for (double x : kXs)
      for (int n : {1, 2, 4, 7}) {
        const double lhs = 2.0 * op::bessel_eval(mu - 1.0, n + 1, x);
        const double rhs =
            (n + 1.0) * (n + 2.0 * mu) / ((n + mu) * (n + mu + 1.0)) *
                op::bessel_eval(mu, n, x) +
            n * (n + 1.0) / ((n + mu) * (2.0 * n + 2.0 * mu + 1.0)) *
                op::bessel_eval(mu, n - 1, x) +
            (n + 2.0 * mu) * (n + 2.0 * mu + 1.0) /
                ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0)) *
                op::bessel_eval(mu, n + 1, x);
        worst = std::max(worst, std::fabs(lhs - rhs) /
                                    std::max(1.0, std::fabs(lhs)));
      }
  return worst;
}

// Backward shift 2x^2 dY_n/dx as a three-term combination.
inline double backward_shift(double h = 1e-5) {
  double worst = 0.0;
  for (double mu : kMus)
    for (double x : {0.5, 1.0, 2.0})
      for (int n : {1, 3, 6}) {
        auto f = [&](double t) { return op::bessel_eval(mu, n, t); };
        const double d1 =
            (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
            (12 * h);
        const double lhs = 2.0 * x * x * d1;
        const double rhs =
            n * (n + 2.0 * mu + 1.0) *
            (-op::bessel_eval(mu, n, x) / ((n + mu) * (n + mu + 1.0)) +
             op::bessel_eval(mu, n - 1, x) /
                 ((n + mu) * (2.0 * n + 2.0 * mu + 1.0)) +
             op::bessel_eval(mu, n + 1, x) /
                 ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0)));
        worst = std::max(worst, std::fabs(lhs - rhs) /
                                    std::max(1.0, std::fabs(lhs)));
      }
  return worst;
}

// Generating function, truncated where the tail is negligible (|4xt| <= 0.1).
inline double generating_function() {
  double worst = 0.0;
  const std::vector<std::pair<double, double>> pts = {
      {0.5, 0.05}, {0.1, 0.1}, {0.25, 0.1}};
  for (double mu : kMus)
    for (auto [x, t] : pts) {
      double sum = 0.0, fact = 1.0, tp = 1.0;
      for (int n = 0; n <= 12; ++n) {
        if (n > 0) {
          fact *= n;
          tp *= t;
        }
        sum += op::bessel_eval(mu, n, x) * tp / fact;
      }
      const double rad = std::sqrt(1.0 - 4.0 * x * t);
      const double closed = std::pow(2.0, 2.0 * mu) / rad *
                            std::pow(1.0 + rad, -2.0 * mu) *
                            std::exp(2.0 * t / (1.0 + rad));
      worst = std::max(worst, std::fabs(sum - closed) / std::fabs(closed));
    }
  return worst;
}

// First step of the B-family recursion against its closed form.
inline double b_first_step() {
  double worst = 0.0;
  for (double omega : {1.0, 2.0})
    for (double a : {0.5, 0.9})
      for (int ell : {3, 5, 7})
        for (double mu : kMus) {
          const spiked::PhysicalParams p{omega, a, ell};
          const auto tp = spiked::tra::tra_params(p);
          const auto B = spiked::tra::b_poly_sequence(tp, mu, 1);
          const double closed =
              (mu + 1.0) * (mu + 0.5) / (2.0 * mu + 1.0) *
              (tp.z + 2.0 / (mu + 1.0) -
               tp.gamma * (mu + 0.5) * (mu + 0.5));
          worst = std::max(worst, std::fabs(B[1] - closed) /
                                      std::max(1.0, std::fabs(closed)));
        }
  return worst;
}

// Squared norm against the closed form at an exactly known point.
inline double norm_spot() {
  // mu = -8.5, n = 0: 0!*Gamma(17)/16 = 20922789888000/16.
  const double expect = 20922789888000.0 / 16.0;
  return std::fabs(op::bessel_norm(-8.5, 0) - expect) / expect;
}

}  // namespace identity_checks
