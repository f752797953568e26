#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spiked/kernels.hpp"

namespace kn = spiked::kernels;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match straightforward loops") {
  REQUIRE(kn::set_backend(kn::backend::scalar));
  std::mt19937 rng(12345);
  for (std::size_t n : {std::size_t{1}, std::size_t{5}, std::size_t{64}}) {
    auto a = random_vec(rng, n), b = random_vec(rng, n), w = random_vec(rng, n);
    double s = 0.0, sw = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += a[i] * b[i];
      sw += w[i] * a[i] * b[i];
    }
    CHECK(kn::dot(a.data(), b.data(), n) == doctest::Approx(s).epsilon(1e-15));
    CHECK(kn::weighted_dot(w.data(), a.data(), b.data(), n) ==
          doctest::Approx(sw).epsilon(1e-15));

    auto y = b;
    kn::axpy(0.37, a.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(y[i] == doctest::Approx(b[i] + 0.37 * a[i]).epsilon(1e-15));

    std::vector<double> out(n);
    kn::recurrence_step(a.data(), b.data(), w.data(), out.data(), n, 2.0,
                        0.3, -0.7, 1.9);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(out[i] == doctest::Approx(((2.0 * a[i] + 0.3) * b[i] -
                                       0.7 * w[i]) *
                                      1.9)
                          .epsilon(1e-15));
  }
}

TEST_CASE("vector backends agree with the scalar reference") {
  std::mt19937 rng(67890);
  for (kn::backend b : {kn::backend::avx2, kn::backend::neon}) {
    if (!kn::set_backend(b)) continue;
    INFO("backend ", kn::backend_name(b));
    for (std::size_t n :
         {std::size_t{1}, std::size_t{3}, std::size_t{4}, std::size_t{7},
          std::size_t{8}, std::size_t{31}, std::size_t{256},
          std::size_t{1000}}) {
      auto a = random_vec(rng, n), v = random_vec(rng, n),
           w = random_vec(rng, n);

      kn::set_backend(kn::backend::scalar);
      const double d_ref = kn::dot(a.data(), v.data(), n);
      const double wd_ref = kn::weighted_dot(w.data(), a.data(), v.data(), n);
      auto y_ref = v;
      kn::axpy(1.7, a.data(), y_ref.data(), n);
      std::vector<double> r_ref(n);
      kn::recurrence_step(a.data(), v.data(), w.data(), r_ref.data(), n, 1.0,
                          -2.5, 0.8, 0.5);

      kn::set_backend(b);
      double scale = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        scale += std::fabs(a[i] * v[i]);
      CHECK(std::fabs(kn::dot(a.data(), v.data(), n) - d_ref) <=
            1e-13 * (scale + std::fabs(d_ref)));
      CHECK(std::fabs(kn::weighted_dot(w.data(), a.data(), v.data(), n) -
                      wd_ref) <= 1e-13 * (scale + std::fabs(wd_ref)));
      auto y = v;
      kn::axpy(1.7, a.data(), y.data(), n);
      std::vector<double> r(n);
      kn::recurrence_step(a.data(), v.data(), w.data(), r.data(), n, 1.0,
                          -2.5, 0.8, 0.5);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::fabs(y[i] - y_ref[i]) <= 1e-13 * (1.0 + std::fabs(y_ref[i])));
        CHECK(std::fabs(r[i] - r_ref[i]) <= 1e-13 * (1.0 + std::fabs(r_ref[i])));
      }
    }
  }
  kn::set_backend(kn::backend::scalar);
}

TEST_CASE("unsupported backends are refused") {
#if !defined(__aarch64__)
  CHECK_FALSE(kn::set_backend(kn::backend::neon));
#endif
  CHECK(kn::set_backend(kn::backend::scalar));
}
