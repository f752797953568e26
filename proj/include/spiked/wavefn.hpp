#pragma once

#include <array>
#include <vector>

#include "spiked/types.hpp"

namespace spiked::wavefn {

// Radial bound-state function evaluated on a grid:
//   psi(r) = f0 * (omega r^2)^{-mu-1/4} e^{-omega r^2/2}
//            * sum_{n=0}^{nmax} F_n Y_n^mu(1/(omega r^2))
// with mu = -E/(2 omega) and the finite coefficient series F_n.
struct Wavefunction {
  PhysicalParams params;
  int k = 0;        // radial quantum number this energy belongs to
  double E = 0.0;
  double mu = 0.0;
  int nmax = 0;     // series length - 1
  double f0 = 1.0;  // overall factor applied to psi
  std::vector<double> r;
  std::vector<double> psi;
};

// Uniform default grid on [0.05, 8]/sqrt(omega) with `npts` points.
std::vector<double> default_grid(double omega, int npts = 4000);

// Builds the series wavefunction at energy E. With normalize = true, f0 is
// chosen so the trapezoid L2 norm on the grid is 1 (the series then keeps a
// positive large-r tail); otherwise f0 = 1.
Wavefunction build_wavefunction(const PhysicalParams& p, double E, int k,
                                const std::vector<double>& r_grid = {},
                                bool normalize = true);

// max over interior grid points with |psi| > 1e-8 max|psi| of
// |(-psi''/2 + (V - E) psi)| / (|E| max|psi|), five-point second differences.
// Requires a uniform grid of at least 2000 points.
double schrodinger_residual(const Wavefunction& w);

// Same, restricted to r >= r_min. The finite series solves the wave equation
// exactly except for one uncancelled term whose relative weight grows like
// r^-2 toward the origin, so the defect concentrates at small r.
double schrodinger_residual_above(const Wavefunction& w, double r_min);

// Sign changes of psi across the grid, counted where |psi| > 1e-8 max|psi|.
int count_nodes(const Wavefunction& w);

// Trapezoid integral of a*b over the shared grid (grids must match).
double overlap(const Wavefunction& a, const Wavefunction& b);

// The six lowest states with raw series normalization (f0 = 1).
struct FigData {
  std::vector<double> r;
  std::array<std::vector<double>, 6> psi;
  std::array<double, 6> E;
  std::array<int, 6> nmax;
};
FigData fig1_data(const PhysicalParams& p, const EnergySpectrum& spectrum,
                  const std::vector<double>& r_grid = {});

}  // namespace spiked::wavefn
