#include "spiked/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "spiked/kernels.hpp"
#include "spiked/tra.hpp"

namespace spiked::wavefn {

std::vector<double> default_grid(double omega, int npts) {
  if (!(omega > 0.0)) throw error(errc::bad_argument, "omega must be > 0");
  if (npts < 2) throw error(errc::bad_argument, "npts must be >= 2");
  const double s = 1.0 / std::sqrt(omega);
  const double r0 = 0.05 * s, r1 = 8.0 * s;
  std::vector<double> r(npts);
  for (int i = 0; i < npts; ++i)
    r[i] = r0 + (r1 - r0) * i / (npts - 1);
  return r;
}

namespace {

// Series values on the whole grid: one batched recurrence step per degree.
std::vector<double> series_on_grid(double mu, const std::vector<double>& F,
                                   const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<double> acc(n, F[0]);
  if (F.size() == 1) return acc;
  std::vector<double> prev(n, 1.0), cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i)
    cur[i] = 1.0 + 2.0 * (mu + 1.0) * x[i];
  kernels::axpy(F[1], cur.data(), acc.data(), n);
  for (std::size_t m = 1; m + 1 < F.size(); ++m) {
    const double c0 = mu / ((m + mu) * (m + mu + 1.0));
    const double c1 = m / ((m + mu) * (2.0 * m + 2.0 * mu + 1.0));
    const double c2 =
        (m + mu + 1.0) * (2.0 * m + 2.0 * mu + 1.0) / (m + 2.0 * mu + 1.0);
    kernels::recurrence_step(x.data(), cur.data(), prev.data(), next.data(),
                             n, 2.0, c0, c1, c2);
    kernels::axpy(F[m + 1], next.data(), acc.data(), n);
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return acc;
}

double trapezoid_norm_sq(const std::vector<double>& r,
                         const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i)
    s += 0.5 * (r[i] - r[i - 1]) * (v[i] * v[i] + v[i - 1] * v[i - 1]);
  return s;
}

}  // namespace

Wavefunction build_wavefunction(const PhysicalParams& p, double E, int k,
                                const std::vector<double>& r_grid,
                                bool normalize) {
  p.validate();
  tra::BasisParams bp = tra::basis_from_energy(E, p.omega);
  tra::SeriesCoeffs sc = tra::expansion_coeffs(p, bp);

  Wavefunction w;
  w.params = p;
  w.k = k;
  w.E = E;
  w.mu = bp.mu;
  w.nmax = bp.nmax;
  w.r = r_grid.empty() ? default_grid(p.omega) : r_grid;

  const std::size_t n = w.r.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w.r[i] > 0.0))
      throw error(errc::bad_argument, "grid points must be > 0");
    x[i] = 1.0 / (p.omega * w.r[i] * w.r[i]);
  }

  std::vector<double> series = series_on_grid(bp.mu, sc.F, x);
  w.psi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = p.omega * w.r[i] * w.r[i];
    // Prefactor through its logarithm: near the origin the power of r is
    // large and a direct pow would under/overflow first.
    const double lp = (-bp.mu - 0.25) * std::log(u) - 0.5 * u;
    w.psi[i] = std::exp(lp) * series[i];
  }

  if (normalize) {
    const double nrm = trapezoid_norm_sq(w.r, w.psi);
    if (!(nrm > 0.0))
      throw error(errc::bad_argument, "cannot normalize a vanishing function");
    w.f0 = 1.0 / std::sqrt(nrm);
    for (double& v : w.psi) v *= w.f0;
  }
  return w;
}

namespace {

double residual_impl(const Wavefunction& w, double r_min) {
  const std::size_t n = w.r.size();
  if (n < 2000)
    throw error(errc::grid_too_coarse,
                "residual needs a grid of at least 2000 points");
  const double h = w.r[1] - w.r[0];
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(w.r[i] - w.r[i - 1] - h) > 1e-9 * h)
      throw error(errc::grid_too_coarse, "residual needs a uniform grid");

  double amax = 0.0;
  for (double v : w.psi) amax = std::max(amax, std::fabs(v));
  const double floor = 1e-8 * amax;
  const PhysicalParams& p = w.params;
  const double cl = 0.5 * p.ell * (p.ell + 1.0);
  const double ca = 0.5 * p.a2();

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    if (w.r[i] < r_min || std::fabs(w.psi[i]) <= floor) continue;
    const double d2 = (-w.psi[i - 2] + 16.0 * w.psi[i - 1] - 30.0 * w.psi[i] +
                       16.0 * w.psi[i + 1] - w.psi[i + 2]) /
                      (12.0 * h * h);
    const double r = w.r[i], r2 = r * r;
    const double V = cl / r2 + 0.5 * p.omega * p.omega * r2 + ca / (r2 * r2);
    worst = std::max(worst, std::fabs(-0.5 * d2 + (V - w.E) * w.psi[i]));
  }
  return worst / (std::fabs(w.E) * amax);
}

}  // namespace

double schrodinger_residual(const Wavefunction& w) {
  return residual_impl(w, 0.0);
}

double schrodinger_residual_above(const Wavefunction& w, double r_min) {
  return residual_impl(w, r_min);
}

int count_nodes(const Wavefunction& w) {
  double amax = 0.0;
  for (double v : w.psi) amax = std::max(amax, std::fabs(v));
  const double floor = 1e-8 * amax;
  int nodes = 0;
  double last = 0.0;
  for (double v : w.psi) {
    if (std::fabs(v) <= floor) continue;
    if (last != 0.0 && (v < 0.0) != (last < 0.0)) ++nodes;
    last = v;
  }
  return nodes;
}

double overlap(const Wavefunction& a, const Wavefunction& b) {
  if (a.r.size() != b.r.size())
    throw error(errc::bad_argument, "overlap: grids differ");
  for (std::size_t i = 0; i < a.r.size(); ++i)
    if (a.r[i] != b.r[i])
      throw error(errc::bad_argument, "overlap: grids differ");
  double s = 0.0;
  for (std::size_t i = 1; i < a.r.size(); ++i)
    s += 0.5 * (a.r[i] - a.r[i - 1]) *
         (a.psi[i] * b.psi[i] + a.psi[i - 1] * b.psi[i - 1]);
  return s;
}

FigData fig1_data(const PhysicalParams& p, const EnergySpectrum& spectrum,
                  const std::vector<double>& r_grid) {
  if (spectrum.levels.size() < 6)
    throw error(errc::bad_argument, "fig1_data needs six levels");
  FigData out;
  out.r = r_grid.empty() ? default_grid(p.omega) : r_grid;
  for (int k = 0; k < 6; ++k) {
    Wavefunction w = build_wavefunction(p, spectrum.levels[k].E, k, out.r);
    out.psi[k] = std::move(w.psi);
    out.E[k] = w.E;
    out.nmax[k] = w.nmax;
  }
  return out;
}

}  // namespace spiked::wavefn
