#pragma once

#include <cstddef>
#include <vector>

namespace spiked::eigen {

// Symmetric tridiagonal matrix: diag.size() = n, off.size() = n-1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;
};

// All eigenvalues, ascending, by Sturm-sequence bisection. Deterministic:
// the same matrix always yields bit-identical output.
std::vector<double> tridiag_eigenvalues(const SymTridiag& T);

// Same, but taking squared off-diagonal entries directly. All off2 entries
// must be >= 0 here; the characteristic-polynomial routines below also accept
// negative products (they never take a square root).
std::vector<double> tridiag_eigenvalues_sq(const std::vector<double>& diag,
                                           const std::vector<double>& off2);

// Number of eigenvalues strictly below y.
int sturm_count(const std::vector<double>& diag,
                const std::vector<double>& off2, double y);

// det(T - y) by the three-term recurrence in plain doubles. Overflows for
// large matrices; prefer the scaled form beyond n of a few dozen.
double char_poly(const std::vector<double>& diag,
                 const std::vector<double>& off2, double y);

// det(T - y) as sign * exp(log_mag); sign == 0 means an exact zero.
struct SignLogDet {
  int sign;
  double log_mag;
};
SignLogDet char_poly_scaled(const std::vector<double>& diag,
                            const std::vector<double>& off2, double y);

// Householder reduction of a dense symmetric matrix (row-major, n*n) to
// tridiagonal form with the same spectrum.
SymTridiag dense_to_tridiag(const std::vector<double>& A, std::size_t n);

// Eigenvalues of a dense symmetric matrix, ascending.
std::vector<double> dense_eigenvalues(const std::vector<double>& A,
                                      std::size_t n);

}  // namespace spiked::eigen
