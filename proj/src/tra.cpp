#include "spiked/tra.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace spiked::tra {

BasisParams basis_from_energy(double E, double omega) {
  if (!(omega > 0.0)) throw error(errc::bad_argument, "omega must be > 0");
  const double mu = -E / (2.0 * omega);
  // Largest integer strictly below -mu - 1/2: at an integer boundary the
  // boundary value itself is excluded.
  const double t = -mu - 0.5;
  const int nmax = static_cast<int>(std::ceil(t)) - 1;
  if (nmax < 0)
    throw error(errc::energy_out_of_range,
                "no admissible polynomial degree: requires E > omega");
  return {mu, nmax};
}

TraParams tra_params(const PhysicalParams& p) {
  p.validate();
  if (p.a == 0.0)
    throw error(errc::bad_argument,
                "a == 0 degenerates the three-term recursion");
  const double wa2 = p.omega * p.a2();
  const double half = p.ell + 0.5;
  return {-16.0 / wa2, -4.0 * half * half / wa2, half * half};
}

TridiagSquared tridiag_coeffs(const PhysicalParams& p, double mu, int nmax) {
  p.validate();
  if (nmax < 0) throw error(errc::bad_argument, "nmax must be >= 0");
  const double wa2 = p.omega * p.a2();
  TridiagSquared t;
  t.diag.resize(static_cast<std::size_t>(nmax) + 1);
  t.off_sq.resize(static_cast<std::size_t>(nmax));
  for (int n = 0; n <= nmax; ++n) {
    const double u = 2.0 * n + 2.0 * mu + 1.0;
    t.diag[n] = u * u + (mu * wa2 / 2.0) / ((n + mu) * (n + mu + 1.0));
  }
  for (int n = 0; n < nmax; ++n) {
    const double down = -(wa2 / 2.0) * (n + 2.0 * mu + 1.0) /
                        ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0));
    const double up = (wa2 / 2.0) * (n + 1.0) /
                      ((n + 1.0 + mu) * (2.0 * n + 2.0 * mu + 3.0));
    t.off_sq[n] = down * up;
  }
  return t;
}

eigen::SymTridiag tridiag_matrix(const PhysicalParams& p,
                                 const BasisParams& b) {
  TridiagSquared t = tridiag_coeffs(p, b.mu, b.nmax);
  eigen::SymTridiag T;
  T.diag = std::move(t.diag);
  T.off.resize(t.off_sq.size());
  for (std::size_t n = 0; n < t.off_sq.size(); ++n) {
    if (t.off_sq[n] < 0.0)
      throw error(errc::nonreal_offdiagonal,
                  "coupling product is negative: no symmetric form at this "
                  "(mu, nmax)");
    T.off[n] = std::sqrt(t.off_sq[n]);
  }
  return T;
}

std::vector<double> b_poly_sequence(const TraParams& tp, double mu, int nmax) {
  if (nmax < 0) throw error(errc::bad_argument, "nmax must be >= 0");
  std::vector<double> B(static_cast<std::size_t>(nmax) + 1);
  B[0] = 1.0;
  double prev = 0.0;
  for (int n = 0; n < nmax; ++n) {
    const double h = n + mu + 0.5;
    const double dg = -2.0 * mu / ((n + mu) * (n + mu + 1.0)) +
                      tp.gamma * h * h;
    const double sub = -static_cast<double>(n) / ((n + mu) * h);
    const double sup = (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * h);
    B[n + 1] = ((tp.z - dg) * B[n] - sub * prev) / sup;
    prev = B[n];
  }
  return B;
}

SeriesCoeffs expansion_coeffs(const PhysicalParams& p, const BasisParams& b) {
  TraParams tp = tra_params(p);
  std::vector<double> B = b_poly_sequence(tp, b.mu, b.nmax);
  SeriesCoeffs sc;
  sc.mu = b.mu;
  sc.F.resize(B.size());
  double g = 1.0;
  for (int n = 0; n <= b.nmax; ++n) {
    sc.F[n] = g * B[n];
    // G_{n+1}/G_n for G_n = (2n+2mu+1)(2mu+1)_n / ((-1)^n n! (2mu+1)).
    g *= (2.0 * n + 2.0 * b.mu + 3.0) / (2.0 * n + 2.0 * b.mu + 1.0) *
         (2.0 * b.mu + 1.0 + n) / (-(n + 1.0));
  }
  return sc;
}

std::vector<double> det_energy_roots(const PhysicalParams& p, int nmax,
                                     double elo, double ehi, int grid_n) {
  p.validate();
  TraParams tp = tra_params(p);
  if (nmax < 0) throw error(errc::bad_argument, "nmax must be >= 0");
  if (!(ehi > elo))
    throw error(errc::bad_argument, "window must satisfy ehi > elo");
  if (grid_n < 2) throw error(errc::bad_argument, "grid_n must be >= 2");

  auto near_pole = [&](double E) {
    const double q = E / p.omega;
    return std::fabs(q - std::round(q)) < 1e-3;
  };
  auto det_sign = [&](double E) -> int {
    TridiagSquared t = tridiag_coeffs(p, -E / (2.0 * p.omega), nmax);
    return eigen::char_poly_scaled(t.diag, t.off_sq, tp.y).sign;
  };

  std::vector<double> roots;
  double eprev = 0.0;
  int sprev = 0;
  bool have_prev = false;
  for (int i = 0; i <= grid_n; ++i) {
    double E = elo + (ehi - elo) * i / grid_n;
    if (near_pole(E)) {
      have_prev = false;
      continue;
    }
    int s = det_sign(E);
    if (s == 0) {
      roots.push_back(E);
      have_prev = false;
      continue;
    }
    if (have_prev && s != sprev) {
      double lo = eprev, hi = E;
      while (hi - lo > 1e-11) {
        double mid = 0.5 * (lo + hi);
        int sm = det_sign(mid);
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        (sm == sprev ? lo : hi) = mid;
      }
      double root = 0.5 * (lo + hi);
      if (!near_pole(root)) roots.push_back(root);
    }
    eprev = E;
    sprev = s;
    have_prev = true;
  }
  return roots;
}

}  // namespace spiked::tra
