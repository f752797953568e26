#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spiked {

enum class errc {
  bad_argument,        // parameter outside its documented domain
  energy_out_of_range, // energy admits no polynomial basis (E <= omega)
  nonreal_offdiagonal, // symmetric tridiagonal form does not exist here
  fit_failure,         // rational interpolation hit a degenerate support set
  rule_too_small,      // quadrature rule cannot integrate this product exactly
  grid_too_coarse,     // radial grid unfit for finite differencing
  no_root,             // root search found nothing in the requested window
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// V(r) = l(l+1)/2r^2 + omega^2 r^2/2 + a^2/2r^4
struct PhysicalParams {
  double omega = 1.0;
  double a = 0.5;
  int ell = 5;

  double a2() const { return a * a; }

  void validate() const {
    if (!(omega > 0.0)) throw error(errc::bad_argument, "omega must be > 0");
    if (!(a >= 0.0)) throw error(errc::bad_argument, "a must be >= 0");
    if (ell < 0) throw error(errc::bad_argument, "ell must be >= 0");
  }
};

struct Level {
  int k;      // radial quantum number
  double E;   // bound-state energy
  double dE;  // deviation from the pure-oscillator level omega*(2k+ell+3/2)
};

struct EnergySpectrum {
  PhysicalParams params;
  std::vector<Level> levels;
};

}  // namespace spiked
