#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spiked/hmatrix.hpp"
#include "spiked/orthopoly.hpp"
#include "spiked/pps.hpp"
#include "spiked/reference_tables.hpp"
#include "spiked/tablegen.hpp"
#include "spiked/tra.hpp"
#include "spiked/wavefn.hpp"

namespace {

using spiked::EnergySpectrum;
using spiked::PhysicalParams;

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw spiked::error(spiked::errc::bad_argument,
                                      "cannot open output file " + path);
      os = file.get();
    }
  }
};

void write_spectrum(const EnergySpectrum& s, const std::string& method,
                    const std::string& format, const std::string& path) {
  OutputTarget out(path);
  if (format == "json") {
    nlohmann::json j;
    j["method"] = method;
    j["omega"] = s.params.omega;
    j["a"] = s.params.a;
    j["ell"] = s.params.ell;
    j["levels"] = nlohmann::json::array();
    for (const auto& lv : s.levels)
      j["levels"].push_back({{"k", lv.k}, {"E", lv.E}, {"dE", lv.dE}});
    *out.os << j.dump(2) << "\n";
  } else {
    *out.os << "k,E,dE\n";
    for (const auto& lv : s.levels)
      *out.os << lv.k << "," << fmt9(lv.E) << "," << fmt9(lv.dE) << "\n";
  }
}

int cmd_spectrum(const std::string& method, PhysicalParams p, int levels,
                 double emax, int fit_points, int size,
                 const std::string& quadrature, double lambda2, int det_n,
                 int det_nmax, std::vector<double> window,
                 const std::string& format, const std::string& path) {
  p.validate();
  EnergySpectrum s;
  if (method == "pps") {
    if (emax <= 0.0) emax = p.omega * (2.0 * levels + p.ell + 2.5);
    s = spiked::pps::pps_spectrum(p, emax, fit_points, levels);
  } else if (method == "matrix") {
    const auto mode = quadrature == "exact"
                          ? spiked::hmatrix::QuadMode::exact_weight
                          : spiked::hmatrix::QuadMode::matched_nodes;
    s = spiked::hmatrix::matrix_spectrum(p, size, levels, mode, lambda2);
  } else {  // det
    const int nmax = det_nmax >= 0 ? det_nmax : std::max(det_n, 0);
    double lo, hi;
    if (window.size() == 2) {
      lo = window[0];
      hi = window[1];
    } else if (det_n >= 0) {
      lo = p.omega * (2.0 * det_n + p.ell + 1.0);
      hi = p.omega * (2.0 * det_n + p.ell + 2.1);
    } else {
      lo = p.omega * (p.ell + 1.0);
      hi = p.omega * (2.0 * nmax + p.ell + 2.1);
    }
    auto roots = spiked::tra::det_energy_roots(p, nmax, lo, hi);
    s.params = p;
    for (double r : roots) {
      const double t = (r / p.omega - p.ell - 1.5) / 2.0;
      const int k = static_cast<int>(std::lround(t));
      const double slot = p.omega * (2.0 * k + p.ell + 1.5);
      if (k < 0 || std::fabs(r - slot) >= 0.5 * p.omega) continue;
      if (det_n >= 0 && k != det_n) continue;
      s.levels.push_back({k, r, r - slot});
    }
    if (s.levels.empty())
      throw spiked::error(spiked::errc::no_root,
                          "no determinant root maps to a level in the window");
  }
  write_spectrum(s, method, format, path);
  return 0;
}

int cmd_tables(int which, const std::string& path) {
  OutputTarget out(path);
  std::vector<int> list;
  if (which == 0)
    list = {1, 2, 3, 4};
  else
    list = {which};
  bool all_ok = true;
  for (int t : list) {
    auto rows = spiked::tablegen::report_table(t);
    int ok = 0;
    *out.os << "table " << t << "\n";
    for (const auto& r : rows) {
      ok += r.ok;
      char line[160];
      std::snprintf(line, sizeof line,
                    "  %-22s computed %14.9f  published %14.9f  |dev| %.3e  "
                    "tol %.0e  %s\n",
                    r.label.c_str(), r.computed, r.published, r.deviation,
                    r.tolerance, r.ok ? "ok" : "FAIL");
      *out.os << line;
      all_ok = all_ok && r.ok;
    }
    *out.os << "  " << ok << "/" << rows.size() << " cells within tolerance\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_check(const std::string& path) {
  OutputTarget out(path);
  bool all_ok = true;
  auto report = [&](const std::string& name, double metric, double bound) {
    const bool ok = metric <= bound;
    all_ok = all_ok && ok;
    *out.os << (ok ? "ok   " : "FAIL ") << name << "  (measured " << fmt9(
        metric) << ", bound " << fmt9(bound) << ")\n";
  };
  namespace op = spiked::orthopoly;

  {  // polynomial evaluation paths agree
    double worst = 0.0;
    for (double mu : {-4.7, -8.5, -12.3})
      for (double x : {0.1, 0.5, 1.0, 5.0})
        for (int n = 0; n <= 8; ++n) {
          const double a = op::bessel_eval(mu, n, x);
          const double b = op::bessel_eval_series(mu, n, x);
          const double c = op::bessel_eval_laguerre(mu, n, x);
          const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
          worst = std::max({worst, std::fabs(a - b) / scale,
                            std::fabs(a - c) / scale});
        }
    report("bessel evaluation paths", worst, 1e-10);
  }
  {  // quadrature normalization and moments
    double worst = 0.0;
    for (double alpha : {0.5, 3.5, 6.5})
      for (int npts : {20, 60}) {
        auto rule = op::gauss_laguerre_rule(alpha, npts);
        for (int pw = 0; pw <= 6; ++pw) {
          double s = 0.0;
          for (std::size_t i = 0; i < rule.x.size(); ++i)
            s += rule.w[i] * std::pow(rule.x[i], pw);
          const double exact = std::exp(std::lgamma(alpha + pw + 1.0));
          worst = std::max(worst, std::fabs(s - exact) / exact);
        }
      }
    report("quadrature moments", worst, 1e-11);
  }
  {  // series coefficients satisfy their three-term recursion
    const PhysicalParams p{1.0, 0.5, 5};
    const auto tp = spiked::tra::tra_params(p);
    const double wa2 = p.omega * p.a2();
    double worst = 0.0;
    for (int k = 0; k <= 3; ++k) {
      const double E = p.omega * (2.0 * k + p.ell + 1.5) + 0.01;
      const auto bp = spiked::tra::basis_from_energy(E, p.omega);
      const auto sc = spiked::tra::expansion_coeffs(p, bp);
      const double mu = bp.mu;
      for (int n = 0; n < bp.nmax; ++n) {
        const double u = 2.0 * n + 2.0 * mu + 1.0;
        const double diag =
            u * u + (mu * wa2 / 2.0) / ((n + mu) * (n + mu + 1.0));
        const double up = (wa2 / 2.0) * (n + 1.0) /
                          ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 3.0));
        const double down =
            n == 0 ? 0.0
                   : -(wa2 / 2.0) * (n + 2.0 * mu) /
                         ((n + mu) * (2.0 * n + 2.0 * mu - 1.0));
        const double lhs = tp.y * sc.F[n];
        const double rhs = diag * sc.F[n] + up * sc.F[n + 1] +
                           (n == 0 ? 0.0 : down * sc.F[n - 1]);
        worst = std::max(worst, std::fabs(lhs - rhs) /
                                    std::max(1.0, std::fabs(lhs)));
      }
    }
    report("series coefficient recursion", worst, 1e-10);
  }
  {  // a = 0 reduces to the pure oscillator
    PhysicalParams p{1.0, 0.0, 5};
    auto s = spiked::hmatrix::matrix_spectrum(
        p, 60, 11, spiked::hmatrix::QuadMode::matched_nodes, 1.1);
    double worst = 0.0;
    for (const auto& lv : s.levels)
      worst = std::max(worst, std::fabs(lv.dE));
    report("pure-oscillator limit", worst, 1e-10);
  }
  {  // independent methods agree
    PhysicalParams p{1.0, 0.5, 5};
    auto sp = spiked::pps::pps_spectrum(p, 29.5, 100, 10);
    auto sm = spiked::hmatrix::matrix_spectrum(
        p, 100, 10, spiked::hmatrix::QuadMode::exact_weight);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k)
      worst = std::max(worst,
                       std::fabs(sp.levels[k].E - sm.levels[k].E));
    report("curve-crossing vs diagonalization", worst, 5e-6);
  }
  return all_ok ? 0 : 1;
}

int cmd_fig1(const std::string& path) {
  const PhysicalParams p{1.0, 0.5, 5};
  auto spec = spiked::pps::pps_spectrum(p, 29.5, 100, 6);
  auto fd = spiked::wavefn::fig1_data(p, spec);
  OutputTarget out(path);
  *out.os << "r,psi0,psi1,psi2,psi3,psi4,psi5\n";
  for (std::size_t i = 0; i < fd.r.size(); ++i) {
    *out.os << fmt9(fd.r[i]);
    for (int k = 0; k < 6; ++k) *out.os << "," << fmt9(fd.psi[k][i]);
    *out.os << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bound states of the radial potential l(l+1)/2r^2 + w^2r^2/2 + "
      "a^2/2r^4"};
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "compute bound-state energies");
  std::string method;
  sp->add_option("--method", method, "pps | matrix | det")
      ->required()
      ->check(CLI::IsMember({"pps", "matrix", "det"}));
  PhysicalParams p;
  double a2_opt = -1.0;
  sp->add_option("--omega", p.omega, "oscillator frequency");
  auto* aopt = sp->add_option("--a", p.a, "singular coupling a");
  sp->add_option("--a2", a2_opt, "singular coupling squared a^2")
      ->excludes(aopt);
  sp->add_option("--ell", p.ell, "angular momentum");
  int levels = 10;
  sp->add_option("--levels", levels, "number of states");
  double emax = -1.0;
  sp->add_option("--emax", emax, "upper end of the energy grid (pps)");
  int fit_points = 100;
  sp->add_option("--fit-points", fit_points, "energy grid size (pps)");
  int size = 100;
  sp->add_option("--size", size, "basis size (matrix)");
  std::string quadrature = "matched";
  sp->add_option("--quadrature", quadrature, "matched | exact (matrix)")
      ->check(CLI::IsMember({"matched", "exact"}));
  double lambda2 = 0.0;
  sp->add_option("--lambda2", lambda2, "basis scale lambda^2 (matrix)");
  int det_n = -1;
  sp->add_option("--n", det_n, "single radial quantum number (det)");
  int det_nmax = -1;
  sp->add_option("--nmax", det_nmax, "max polynomial degree (det)");
  std::vector<double> window;
  sp->add_option("--window", window, "energy window lo hi (det)")
      ->expected(2);
  std::string format = "csv";
  sp->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string out_path = "-";
  sp->add_option("-o,--output", out_path, "output path ('-' = stdout)");

  // tables
  auto* tb = app.add_subcommand("tables",
                                "recompute benchmark tables and compare");
  int which = 0;
  tb->add_option("--which", which, "table number 1..4 (default: all)")
      ->check(CLI::Range(1, 4));
  std::string tb_out = "-";
  tb->add_option("-o,--output", tb_out, "output path");

  // check
  auto* ck = app.add_subcommand("check", "run cross-validation invariants");
  std::string ck_out = "-";
  ck->add_option("-o,--output", ck_out, "output path");

  // fig1
  auto* fg = app.add_subcommand("fig1",
                                "lowest six ell=5 wavefunctions as CSV");
  std::string fg_out = "-";
  fg->add_option("-o,--output", fg_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sp->parsed()) {
      if (a2_opt >= 0.0) p.a = std::sqrt(a2_opt);
      return cmd_spectrum(method, p, levels, emax, fit_points, size,
                          quadrature, lambda2, det_n, det_nmax, window,
                          format, out_path);
    }
    if (tb->parsed()) return cmd_tables(which, tb_out);
    if (ck->parsed()) return cmd_check(ck_out);
    if (fg->parsed()) return cmd_fig1(fg_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
