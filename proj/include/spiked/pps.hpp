#pragma once

#include <vector>

#include "spiked/types.hpp"

namespace spiked::pps {

// Eigenvalues of the energy-parametrized tridiagonal matrix on an energy
// grid. rows[i] belongs to energies[i] and is sorted DESCENDING, so rows[.][k]
// traced across i forms the curve of the k-th bound state: as the energy
// grows the matrix dimension grows with it and new eigenvalues enter from
// below, leaving the leading entries stable.
struct EigenCurves {
  std::vector<double> energies;
  std::vector<std::vector<double>> rows;
  double y_target;  // (ell+1/2)^2
  int skipped = 0;  // grid points dropped (entry poles / no admissible basis)
};

// Grid: npts points uniform on (omega*(1+1e-6), emax]. Points with
// E <= omega, with fewer than two basis degrees, or within 0.1*omega of an
// integer multiple of omega (recursion-coefficient poles) are skipped.
EigenCurves eigen_curves(const PhysicalParams& p, double emax, int npts);

// Rational interpolant through (x_i, f_i) in continued-fraction form.
struct RationalFit {
  std::vector<double> xs;  // support abscissas actually consumed
  std::vector<double> cs;  // continued-fraction coefficients
};

// Builds the interpolant; reproduces every support point exactly (up to
// roundoff). Throws fit_failure on coincident abscissas or a degenerate
// difference table. A single point yields the constant fit.
RationalFit schlessinger_fit(const std::vector<double>& x,
                             const std::vector<double>& f);
double rational_eval(const RationalFit& fit, double t);

// Bound states from the crossings of the eigenvalue curves with y_target.
// Per level k: fit E as a rational function of the curve value, seed from the
// fit at y_target, then refine by bisection on the exact curve inside the
// bracketing grid cell. fit_points is the size of the energy grid.
EnergySpectrum pps_spectrum(const PhysicalParams& p, double emax,
                            int fit_points = 100, int levels = 10);

// Same, reusing a precomputed curve family (the curves depend only on omega
// and a, not on ell).
EnergySpectrum pps_spectrum_from_curves(const PhysicalParams& p,
                                        const EigenCurves& curves,
                                        int levels = 10);

// E - omega*(2n + ell + 3/2).
double delta_e(double E, int n, const PhysicalParams& p);

}  // namespace spiked::pps
