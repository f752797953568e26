#include "spiked/pps.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "spiked/eigen.hpp"
#include "spiked/tra.hpp"

namespace spiked::pps {

namespace {

bool near_entry_pole(double E, double omega) {
  const double q = E / omega;
  return std::fabs(q - std::round(q)) < 0.1;
}

// k-th largest eigenvalue of the energy-parametrized matrix, or NaN when the
// basis at E has fewer than k+1 degrees.
double curve_value(const PhysicalParams& p, double E, int k) {
  tra::BasisParams bp = tra::basis_from_energy(E, p.omega);
  if (bp.nmax + 1 <= k) return std::numeric_limits<double>::quiet_NaN();
  auto ev = eigen::tridiag_eigenvalues(tra::tridiag_matrix(p, bp));
  return ev[ev.size() - 1 - static_cast<std::size_t>(k)];
}

}  // namespace

EigenCurves eigen_curves(const PhysicalParams& p, double emax, int npts) {
  p.validate();
  const tra::TraParams tp = tra::tra_params(p);
  const double lo = p.omega * (1.0 + 1e-6);
  if (!(emax > lo))
    throw error(errc::bad_argument, "emax must exceed omega");
  if (npts < 2) throw error(errc::bad_argument, "npts must be >= 2");

  EigenCurves ec;
  ec.y_target = tp.y;
  ec.energies.reserve(npts);
  ec.rows.reserve(npts);
  for (int i = 1; i <= npts; ++i) {
    const double E = lo + (emax - lo) * i / npts;
    if (near_entry_pole(E, p.omega)) {
      ++ec.skipped;
      continue;
    }
    tra::BasisParams bp;
    try {
      bp = tra::basis_from_energy(E, p.omega);
    } catch (const error&) {
      ++ec.skipped;
      continue;
    }
    if (bp.nmax < 1) {
      ++ec.skipped;
      continue;
    }
    auto ev = eigen::tridiag_eigenvalues(tra::tridiag_matrix(p, bp));
    std::reverse(ev.begin(), ev.end());
    ec.energies.push_back(E);
    ec.rows.push_back(std::move(ev));
  }
  return ec;
}

RationalFit schlessinger_fit(const std::vector<double>& x,
                             const std::vector<double>& f) {
  const std::size_t n = x.size();
  if (n == 0 || f.size() != n)
    throw error(errc::fit_failure, "empty or mismatched support");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[i] == x[j])
        throw error(errc::fit_failure, "coincident support abscissas");

  RationalFit fit;
  fit.xs = x;
  fit.cs.resize(n);
  std::vector<double> g = f;
  fit.cs[0] = g[0];
  for (std::size_t l = 1; l < n; ++l) {
    for (std::size_t i = l; i < n; ++i) {
      const double denom = (x[i] - x[l - 1]) * g[i];
      g[i] = (fit.cs[l - 1] - g[i]) / denom;
      if (!std::isfinite(g[i]))
        throw error(errc::fit_failure, "degenerate difference table");
    }
    fit.cs[l] = g[l];
  }
  return fit;
}

double rational_eval(const RationalFit& fit, double t) {
  const std::size_t m = fit.cs.size();
  double acc = 1.0;
  for (std::size_t l = m; l-- > 1;)
    acc = 1.0 + fit.cs[l] * (t - fit.xs[l - 1]) / acc;
  return fit.cs[0] / acc;
}

EnergySpectrum pps_spectrum_from_curves(const PhysicalParams& p,
                                        const EigenCurves& curves,
                                        int levels) {
  p.validate();
  const double y = tra::tra_params(p).y;
  const std::size_t npts = curves.energies.size();
  if (npts < 4)
    throw error(errc::fit_failure, "too few usable energy grid points");
  // Largest gap that still counts as adjacent: brackets must not straddle a
  // skipped pole region.
  double step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < npts; ++i)
    step = std::min(step, curves.energies[i] - curves.energies[i - 1]);
  const double max_gap = 1.5 * step;

  EnergySpectrum spec;
  spec.params = p;
  for (int k = 0; k < levels; ++k) {
    std::vector<double> ys, es;
    for (std::size_t i = 0; i < npts; ++i)
      if (curves.rows[i].size() > static_cast<std::size_t>(k)) {
        ys.push_back(curves.rows[i][k]);
        es.push_back(curves.energies[i]);
      }
    if (ys.size() < 4) break;

    double seed;
    try {
      seed = rational_eval(schlessinger_fit(ys, es), y);
    } catch (const error&) {
      break;
    }

    // Bracketing cell on the exact curve, preferring the one holding the seed.
    double best_lo = 0.0, best_hi = 0.0, best_dist = 0.0;
    bool found = false;
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      if (es[i + 1] - es[i] > max_gap) continue;
      const double g0 = ys[i] - y, g1 = ys[i + 1] - y;
      if (g0 == 0.0 || g1 == 0.0 || (g0 < 0.0) != (g1 < 0.0)) {
        double dist = (seed >= es[i] && seed <= es[i + 1])
                          ? 0.0
                          : std::min(std::fabs(seed - es[i]),
                                     std::fabs(seed - es[i + 1]));
        if (!found || dist < best_dist) {
          best_lo = es[i];
          best_hi = es[i + 1];
          best_dist = dist;
          found = true;
        }
      }
    }

    double Ek = seed;
    if (found) {
      double lo = best_lo, hi = best_hi;
      double glo = curve_value(p, lo, k) - y;
      const double tol = 1e-13 * std::max(1.0, std::fabs(hi));
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = curve_value(p, mid, k) - y;
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      Ek = 0.5 * (lo + hi);
    }
    spec.levels.push_back({k, Ek, delta_e(Ek, k, p)});
  }
  return spec;
}

EnergySpectrum pps_spectrum(const PhysicalParams& p, double emax,
                            int fit_points, int levels) {
  return pps_spectrum_from_curves(p, eigen_curves(p, emax, fit_points),
                                  levels);
}

double delta_e(double E, int n, const PhysicalParams& p) {
  return E - p.omega * (2.0 * n + p.ell + 1.5);
}

}  // namespace spiked::pps
