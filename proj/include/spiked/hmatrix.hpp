#pragma once

#include <vector>

#include "spiked/types.hpp"

namespace spiked::hmatrix {

// Quadrature policy for the singular matrix elements of a^2/2r^4 in the
// scaled-Laguerre oscillator basis (weight x^nu e^{-x}, nu = ell+1/2):
//   exact_weight : Gauss rule for the weight x^{nu-2} e^{-x}; integrates the
//                  polynomial part exactly. The quadrature is converged with
//                  respect to its node count.
//   matched_nodes: Gauss rule for the basis weight x^nu e^{-x} with exactly
//                  one node per basis function and integrand folded with
//                  x^{-2}. The node count is deliberately tied to the basis
//                  size; the pair (basis, rule) converges jointly as the size
//                  grows. This is the conventional pairing for this problem
//                  and the one reproduced by the benchmark tables.
enum class QuadMode { exact_weight, matched_nodes };

struct Hamiltonian {
  int size = 0;
  double lambda2 = 0.0;  // basis length-scale parameter (lambda^2)
  QuadMode mode = QuadMode::matched_nodes;
  bool ell_zero_warning = false;  // the r^-4 integral diverges at ell = 0
  std::vector<double> dense;      // row-major, size*size, symmetric
};

// Overlap integral x^{ell-3/2} e^{-x} L_n^{ell+1/2} L_m^{ell+1/2} over
// (0, inf) with raw (non-normalized) Laguerre polynomials, by the
// exact-weight rule. Requires ell >= 1 (the integral diverges otherwise) and
// quad_pts >= n+m+1 (throws rule_too_small below that).
double singular_overlap(int n, int m, int ell, int quad_pts);

// Full Hamiltonian matrix in the scaled basis. lambda2 <= 0 selects the
// natural scale lambda^2 = omega. For ell = 0 the exact_weight mode throws;
// matched_nodes proceeds but sets ell_zero_warning.
Hamiltonian hamiltonian(const PhysicalParams& p, int size,
                        QuadMode mode = QuadMode::matched_nodes,
                        double lambda2 = 0.0);

// Lowest `levels` eigenvalues with their oscillator deviations.
EnergySpectrum matrix_spectrum(const PhysicalParams& p, int size,
                               int levels = 10,
                               QuadMode mode = QuadMode::matched_nodes,
                               double lambda2 = 0.0);

}  // namespace spiked::hmatrix
