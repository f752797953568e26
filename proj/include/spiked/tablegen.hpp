#pragma once

#include <array>
#include <string>
#include <vector>

#include "spiked/types.hpp"

namespace spiked::tablegen {

// Recomputations of the benchmark tables with the settings that produced
// them (omega = 1, a = 0.5 for tables 1-3; 100 fit points / basis size 100).

// [ell index][k]: dE via the curve-crossing method, ell in {3,4,5,6,7}.
std::array<std::array<double, 10>, 5> compute_table1();

// [size index] -> dE_0..dE_min(N,9) via determinant roots, ell = 5,
// N in {0,1,2,5,10}.
std::array<std::vector<double>, 5> compute_table2();

// [ell index][k]: dE via 100x100 matched-node diagonalization, lambda^2 = 1.
std::array<std::array<double, 10>, 5> compute_table3();

// [ell index][a2 index][k]: E via 100x100 matched-node diagonalization for
// ell in {3,4,5,10,40}, a^2 in {0.001, 1.0}.
std::array<std::array<std::array<double, 3>, 2>, 5> compute_table4();

// One comparison row for reporting.
struct CellReport {
  std::string label;
  double computed;
  double published;
  double deviation;  // |computed - published|
  double tolerance;
  bool ok;
};

std::vector<CellReport> report_table(int which);  // which in 1..4

}  // namespace spiked::tablegen
