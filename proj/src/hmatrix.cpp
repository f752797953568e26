#include "spiked/hmatrix.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "spiked/eigen.hpp"
#include "spiked/kernels.hpp"
#include "spiked/orthopoly.hpp"
#include "spiked/pps.hpp"

namespace spiked::hmatrix {

namespace {

// Values of sqrt(w_i) * x_i^{-px} * Lhat_n(x_i) for n = 0..count-1 at all
// nodes of `rule`, where Lhat is the orthonormal Laguerre family for the
// weight x^nu e^{-x}. Folding sqrt(w) (and any x power) into the starting
// value keeps every column representable even when w underflows. The signs
// follow the classical L_n convention; the confinement block in hamiltonian()
// is written in that convention, so a sign-flipped family would conjugate the
// coupling block but not the confinement block and skew every spectrum
// computed at a length scale other than the confinement scale.
std::vector<std::vector<double>> folded_basis_columns(
    const orthopoly::QuadRule& rule, double nu, int count, int px) {
  const std::size_t K = rule.x.size();
  const double lg = std::lgamma(nu + 1.0);
  std::vector<std::vector<double>> q(count, std::vector<double>(K));
  for (std::size_t i = 0; i < K; ++i)
    q[0][i] = std::exp(0.5 * rule.log_w[i] - 0.5 * lg -
                       px * std::log(rule.x[i]));
  if (count == 1) return q;
  {
    const double e1 = std::sqrt(nu + 1.0);
    kernels::recurrence_step(rule.x.data(), q[0].data(), q[0].data(),
                             q[1].data(), K, -1.0, nu + 1.0, 0.0, 1.0 / e1);
  }
  for (int n = 1; n + 1 < count; ++n) {
    const double en = std::sqrt(n * (n + nu));
    const double en1 = std::sqrt((n + 1.0) * (n + 1.0 + nu));
    kernels::recurrence_step(rule.x.data(), q[n].data(), q[n - 1].data(),
                             q[n + 1].data(), K, -1.0,
                             2.0 * n + nu + 1.0, -en, 1.0 / en1);
  }
  return q;
}

}  // namespace

double singular_overlap(int n, int m, int ell, int quad_pts) {
  if (n < 0 || m < 0)
    throw error(errc::bad_argument, "singular_overlap: n, m must be >= 0");
  if (ell < 1)
    throw error(errc::bad_argument,
                "singular_overlap: integral diverges for ell < 1");
  if (quad_pts < n + m + 1)
    throw error(errc::rule_too_small,
                "singular_overlap: rule cannot integrate this product");
  const double nu = ell + 0.5;
  orthopoly::QuadRule rule = orthopoly::gauss_laguerre_rule(nu - 2.0,
                                                            quad_pts);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    s += rule.w[i] * orthopoly::laguerre_eval(n, nu, rule.x[i]) *
         orthopoly::laguerre_eval(m, nu, rule.x[i]);
  return s;
}

Hamiltonian hamiltonian(const PhysicalParams& p, int size, QuadMode mode,
                        double lambda2) {
  p.validate();
  if (size < 1) throw error(errc::bad_argument, "size must be >= 1");
  const double l2 = lambda2 > 0.0 ? lambda2 : p.omega;
  const double nu = p.ell + 0.5;
  const double ratio = p.omega * p.omega / (l2 * l2);

  Hamiltonian H;
  H.size = size;
  H.lambda2 = l2;
  H.mode = mode;
  H.dense.assign(static_cast<std::size_t>(size) * size, 0.0);
  auto at = [&](int i, int j) -> double& { return H.dense[i * size + j]; };

  for (int n = 0; n < size; ++n)
    at(n, n) = 0.5 * l2 * (1.0 + ratio) * (2.0 * n + nu + 1.0);
  for (int n = 0; n + 1 < size; ++n) {
    const double v =
        0.5 * l2 * (1.0 - ratio) * std::sqrt((n + 1.0) * (n + 1.0 + nu));
    at(n, n + 1) = v;
    at(n + 1, n) = v;
  }

  const double coupling = 0.5 * l2 * l2 * p.a2();
  if (coupling != 0.0) {
    if (p.ell < 1) {
      if (mode == QuadMode::exact_weight)
        throw error(errc::bad_argument,
                    "r^-4 matrix elements diverge for ell = 0");
      H.ell_zero_warning = true;
    }
    orthopoly::QuadRule rule =
        mode == QuadMode::exact_weight
            ? orthopoly::gauss_laguerre_rule(nu - 2.0, size + 10)
            : orthopoly::gauss_laguerre_rule(nu, size);
    auto q = folded_basis_columns(rule, nu, size,
                                  mode == QuadMode::exact_weight ? 0 : 1);
    const std::size_t K = rule.x.size();
    for (int n = 0; n < size; ++n)
      for (int m = n; m < size; ++m) {
        const double v = coupling * kernels::dot(q[n].data(), q[m].data(), K);
        at(n, m) += v;
        if (m != n) at(m, n) += v;
      }
  }
  return H;
}

EnergySpectrum matrix_spectrum(const PhysicalParams& p, int size, int levels,
                               QuadMode mode, double lambda2) {
  Hamiltonian H = hamiltonian(p, size, mode, lambda2);
  auto ev = eigen::dense_eigenvalues(H.dense, static_cast<std::size_t>(size));
  EnergySpectrum spec;
  spec.params = p;
  const int count = std::min(levels, size);
  for (int k = 0; k < count; ++k)
    spec.levels.push_back({k, ev[k], pps::delta_e(ev[k], k, p)});
  return spec;
}

}  // namespace spiked::hmatrix
