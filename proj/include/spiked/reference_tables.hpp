#pragma once

#include <array>
#include <vector>

namespace spiked::reference_tables {

// Benchmark values for V(r) = l(l+1)/2r^2 + r^2/2 + 1/8r^4
// (omega = 1, a = 0.5) unless stated otherwise.

inline constexpr std::array<int, 5> table1_ell = {3, 4, 5, 6, 7};

// Deviations dE_k = E_k - (2k + ell + 3/2), k = 0..9, from the
// curve-crossing (parameter-spectrum) method with 100 fit points.
extern const std::array<std::array<double, 10>, 5> table1;

// Deviations for ell = 5 from determinant roots at fixed matrix size N+1,
// N in {0, 1, 2, 5, 10}; column N lists k = 0..min(N,9).
inline constexpr std::array<int, 5> table2_sizes = {0, 1, 2, 5, 10};
extern const std::array<std::vector<double>, 5> table2;

// Deviations from diagonalization in the oscillator basis, 100x100,
// lambda^2 = omega, matched-node quadrature.
extern const std::array<std::array<double, 10>, 5> table3;

// Absolute energies E_k, k = 0..2, for a^2 = 0.001 and a^2 = 1.0 at
// ell in {3, 4, 5, 10, 40}: this method and an independent published
// reference calculation.
inline constexpr std::array<int, 5> table4_ell = {3, 4, 5, 10, 40};
inline constexpr std::array<double, 2> table4_a2 = {0.001, 1.0};
struct Table4Entry {
  double this_work;
  double reference;
};
// [ell_index][a2_index][k]
extern const std::array<std::array<std::array<Table4Entry, 3>, 2>, 5> table4;

}  // namespace spiked::reference_tables
