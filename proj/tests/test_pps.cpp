#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "spiked/pps.hpp"
#include "spiked/reference_tables.hpp"
#include "spiked/tra.hpp"
#include "spiked/types.hpp"

using spiked::PhysicalParams;
namespace pps = spiked::pps;

namespace {

// A rational function of numerator degree 2 and denominator degree 3 needs
// every coefficient of a six-point continued fraction, so the difference
// table stays regular and the interpolant must reproduce it identically.
double target(double t) {
  return (2.0 + t + 0.3 * t * t) /
         (1.0 + 3.0 * t + 0.5 * t * t + 0.1 * t * t * t);
}

}  // namespace

TEST_CASE("rational interpolation reproduces a matched-order rational") {
  const std::vector<double> xs{0.0, 0.3, 0.7, 1.1, 1.6, 2.2};
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = target(xs[i]);
  const auto fit = pps::schlessinger_fit(xs, fs);

  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(std::fabs(pps::rational_eval(fit, xs[i]) - fs[i]) <= 1e-10);

  double worst = 0.0;
  for (int j = 0; j < 50; ++j) {
    const double t = 0.02 + 0.05 * j;
    const double r = pps::rational_eval(fit, t);
    worst = std::max(worst, std::fabs(r - target(t)) / std::fabs(target(t)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rational interpolation edge cases") {
  const auto c = pps::schlessinger_fit({1.5}, {4.25});
  CHECK(pps::rational_eval(c, -3.0) == 4.25);
  CHECK(pps::rational_eval(c, 12.0) == 4.25);

  CHECK_THROWS_AS(pps::schlessinger_fit({1.0, 2.0, 1.0}, {1.0, 2.0, 3.0}),
                  spiked::error);
  CHECK_THROWS_AS(pps::schlessinger_fit({1.0, 2.0}, {1.0}), spiked::error);
  CHECK_THROWS_AS(pps::schlessinger_fit({}, {}), spiked::error);
}

TEST_CASE("eigenvalue curves: grid hygiene and row structure") {
  const PhysicalParams p{1.0, 0.5, 5};
  const auto ec = pps::eigen_curves(p, 20.0, 60);

  REQUIRE(!ec.energies.empty());
  CHECK(ec.skipped > 0);
  CHECK(ec.rows.size() == ec.energies.size());
  CHECK(ec.y_target == doctest::Approx(30.25).epsilon(1e-15));

  for (std::size_t i = 0; i < ec.energies.size(); ++i) {
    const double E = ec.energies[i];
    CHECK(E > p.omega);
    CHECK(E <= 20.0 + 1e-12);
    // No kept point sits inside a recursion-pole window.
    const double q = E / p.omega;
    CHECK(std::fabs(q - std::round(q)) >= 0.1);
    // Row length tracks the admissible polynomial degree at that energy.
    const auto bp = spiked::tra::basis_from_energy(E, p.omega);
    CHECK(ec.rows[i].size() == static_cast<std::size_t>(bp.nmax) + 1);
    // Rows are sorted descending so a fixed column index follows one state.
    for (std::size_t k = 1; k < ec.rows[i].size(); ++k)
      CHECK(ec.rows[i][k - 1] >= ec.rows[i][k]);
    if (i > 0) CHECK(ec.energies[i] > ec.energies[i - 1]);
  }

  CHECK_THROWS_AS(pps::eigen_curves(p, 0.5, 60), spiked::error);
  CHECK_THROWS_AS(pps::eigen_curves(p, 20.0, 1), spiked::error);
}

TEST_CASE("an all-skipped grid leaves too little support to fit") {
  const PhysicalParams p{1.0, 0.5, 5};
  const auto ec = pps::eigen_curves(p, 1.05, 10);
  CHECK(ec.energies.empty());
  CHECK(ec.skipped == 10);
  CHECK_THROWS_AS(pps::pps_spectrum_from_curves(p, ec, 1), spiked::error);
}

TEST_CASE("ground-state shift for the reference configuration") {
  const PhysicalParams p{1.0, 0.5, 5};
  const auto spec = pps::pps_spectrum(p, 10.0, 60, 1);
  REQUIRE(spec.levels.size() == 1);
  CHECK(spec.levels[0].k == 0);
  CHECK(std::fabs(spec.levels[0].dE - 0.005038139) <= 1e-8);
  CHECK(spec.levels[0].E ==
        doctest::Approx(6.5 + spec.levels[0].dE).epsilon(1e-14));
}

TEST_CASE("level list truncates when the grid cannot support a curve") {
  const PhysicalParams p{1.0, 0.5, 5};
  const auto spec = pps::pps_spectrum(p, 12.0, 60, 10);
  CHECK(spec.levels.size() < 10);
  CHECK(spec.levels.size() >= 3);
  for (std::size_t k = 0; k < spec.levels.size(); ++k)
    CHECK(spec.levels[k].k == static_cast<int>(k));
  // The low levels are inside the grid and fully refined.
  CHECK(std::fabs(spec.levels[0].dE - 0.005038139) <= 1e-8);
  CHECK(std::fabs(spec.levels[1].dE - 0.006579901) <= 1e-8);
}

TEST_CASE("energy shift bookkeeping") {
  const PhysicalParams p{1.0, 0.5, 5};
  CHECK(pps::delta_e(6.505, 0, p) == doctest::Approx(0.005).epsilon(1e-12));
  CHECK(pps::delta_e(8.6, 1, p) ==
        doctest::Approx(8.6 - 8.5).epsilon(1e-9));
}

// The refinement contract: the rational-fit seed is supposed to land within
// 1e-7 of the bisection root it seeds. Measured behaviour: this holds for
// ell >= 5 except the last level of the reference grid, and degrades to
// ~1e-4 for ell = 3 where the curves are steepest. The checks below record
// the contract as stated; the failing cases print their measured gap.
TEST_CASE("fit seed versus refined root across the reference spectra") {
  const PhysicalParams base{1.0, 0.5, 3};
  const auto curves = pps::eigen_curves(base, 29.5, 100);

  for (int ell : spiked::reference_tables::table1_ell) {
    PhysicalParams p{1.0, 0.5, ell};
    const double y = spiked::tra::tra_params(p).y;
    const auto spec = pps::pps_spectrum_from_curves(p, curves, 10);
    REQUIRE(spec.levels.size() == 10);

    for (int k = 0; k < 10; ++k) {
      std::vector<double> ys, es;
      for (std::size_t i = 0; i < curves.energies.size(); ++i)
        if (curves.rows[i].size() > static_cast<std::size_t>(k)) {
          ys.push_back(curves.rows[i][k]);
          es.push_back(curves.energies[i]);
        }
      REQUIRE(ys.size() >= 4);
      const double seed =
          pps::rational_eval(pps::schlessinger_fit(ys, es), y);
      const double root = spec.levels[k].E;
      const double gap = std::fabs(seed - root);
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "ell=%d k=%d seed=%.12f root=%.12f gap=%.3e", ell, k,
                    seed, root, gap);
      CHECK_MESSAGE(gap <= 1e-7 * std::max(1.0, std::fabs(root)), msg);
    }
  }
}
