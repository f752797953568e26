#pragma once

#include <vector>

namespace spiked::orthopoly {

// (x)_n = x(x+1)...(x+n-1), n >= 0; (x)_0 = 1.
double pochhammer(double x, int n);

// Bessel polynomial Y_n^mu(x) on the positive half line, evaluated by the
// three-term recursion
//   2x Y_n = -mu/((n+mu)(n+mu+1)) Y_n - n/((n+mu)(2n+2mu+1)) Y_{n-1}
//            + (n+2mu+1)/((n+mu+1)(2n+2mu+1)) Y_{n+1}.
// The family is orthogonal on the half line only while mu < -n - 1/2.
double bessel_eval(double mu, int n, double x);

// Same polynomial from its terminating hypergeometric series
// sum_j (-n)_j (n+2mu+1)_j / j! (-x)^j.
double bessel_eval_series(double mu, int n, double x);

// Same polynomial through the Laguerre connection
// Y_n^mu(x) = n! (-x)^n L_n^{-(2n+2mu+1)}(1/x), x > 0.
double bessel_eval_laguerre(double mu, int n, double x);

// Y_0..Y_nmax at one point.
std::vector<double> bessel_sequence(double mu, int nmax, double x);

// Squared norm under the weight x^{2mu} e^{-1/x} on (0, inf):
// -n! Gamma(-n-2mu) / (2n+2mu+1). Requires mu < -n - 1/2.
double bessel_norm(double mu, int n);

// Generalized Laguerre polynomial L_n^alpha(x), any real alpha, by the
// ascending recursion.
double laguerre_eval(int n, double alpha, double x);

// Gauss-Laguerre rule for the weight x^alpha e^{-x} on (0, inf).
// Nodes ascending. log_w always holds log(w); w itself may underflow to zero
// for extreme nodes of large rules, so integrands that need extreme-node
// accuracy should fold exp(log_w) into their evaluation.
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> log_w;
};
QuadRule gauss_laguerre_rule(double alpha, int npts);

}  // namespace spiked::orthopoly
