#pragma once

#include <vector>

#include "spiked/eigen.hpp"
#include "spiked/types.hpp"

namespace spiked::tra {

// Expansion-basis parameters tied to one energy E = -2*mu*omega.
// nmax is the largest polynomial degree with mu < -nmax - 1/2, i.e. the
// largest integer strictly below -mu - 1/2; the finite series for a bound
// state runs over n = 0..nmax.
struct BasisParams {
  double mu;
  int nmax;
};

// Throws energy_out_of_range when E <= omega (no degree is admissible).
BasisParams basis_from_energy(double E, double omega);

// Potential-dependent constants of the three-term recursion:
//   gamma = -16/(omega a^2),  z = -4 (ell+1/2)^2 / (omega a^2),
//   y = (ell+1/2)^2 is the spectral target of the tridiagonal problem.
struct TraParams {
  double gamma;
  double z;
  double y;
};
// Throws bad_argument when a == 0 (the recursion degenerates).
TraParams tra_params(const PhysicalParams& p);

// Diagonal and signed products of the super/sub-diagonal couplings of the
// recursion matrix:
//   diag[n]   = (2n+2mu+1)^2 + (mu omega a^2/2)/((n+mu)(n+mu+1))
//   off_sq[n] = product of the two couplings between rows n and n+1.
// off_sq[n] < 0 happens whenever some degree n has 2n+1 < E/omega < 2n+3 at
// fixed matrix size; determinant evaluation consumes the signed product and
// never needs the square root.
struct TridiagSquared {
  std::vector<double> diag;
  std::vector<double> off_sq;
};
TridiagSquared tridiag_coeffs(const PhysicalParams& p, double mu, int nmax);

// Symmetric form with real off-diagonals b_n = sqrt(off_sq[n]).
// Throws nonreal_offdiagonal if any off_sq[n] < 0; this cannot happen for a
// basis obtained from basis_from_energy.
eigen::SymTridiag tridiag_matrix(const PhysicalParams& p,
                                 const BasisParams& b);

// B_0..B_nmax of the two-parameter polynomial family defined by
//   z B_n = [-2mu/((n+mu)(n+mu+1)) + gamma (n+mu+1/2)^2] B_n
//           - n/((n+mu)(n+mu+1/2)) B_{n-1}
//           + (n+2mu+1)/((n+mu+1)(n+mu+1/2)) B_{n+1},   B_0 = 1.
std::vector<double> b_poly_sequence(const TraParams& tp, double mu, int nmax);

// Coefficients F_n of the finite bound-state series: F_n = G_n * B_n with
// G_n = (2n+2mu+1)(2mu+1)_n / ((-1)^n n! (2mu+1)), F_0 = 1.
struct SeriesCoeffs {
  double mu;
  std::vector<double> F;
};
SeriesCoeffs expansion_coeffs(const PhysicalParams& p, const BasisParams& b);

// Bound-state energies inside (elo, ehi) from sign changes of
// det(T(E) - y) at fixed matrix size nmax+1, refined by bisection to an
// absolute width of 1e-11. Candidates within 1e-3*omega of an integer
// multiple of omega are discarded: matrix entries have poles there and the
// determinant changes sign without a root.
std::vector<double> det_energy_roots(const PhysicalParams& p, int nmax,
                                     double elo, double ehi,
                                     int grid_n = 2000);

}  // namespace spiked::tra
