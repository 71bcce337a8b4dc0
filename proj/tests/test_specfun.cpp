#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tricomi/error.hpp"
#include "tricomi/specfun.hpp"

using namespace tricomi;
using namespace tricomi::specfun;

TEST_SUITE("specfun") {

TEST_CASE("gamma against the standard library") {
  for (double x : {0.1, 0.5, 1.0, 1.75, 3.25, 7.5, 20.3, -0.5, -1.5, -2.25, -7.1}) {
    CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));
  }
  CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_real(0.0), PoleError);
  CHECK_THROWS_AS(gamma_real(-3.0), PoleError);
}

TEST_CASE("reciprocal gamma") {
  CHECK(recip_gamma(0.0) == 0.0);
  CHECK(recip_gamma(-4.0) == 0.0);
  CHECK(recip_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(recip_gamma(-1.5) == doctest::Approx(3.0 / (4.0 * std::sqrt(std::numbers::pi))).epsilon(1e-13));
}

TEST_CASE("beta function") {
  CHECK(beta_fn(2.0, 0.5) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(beta_fn(1.0, 1.25) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(beta_fn(0.25, 0.25) == doctest::Approx(std::beta(0.25, 0.25)).epsilon(1e-13));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
}

TEST_CASE("even_bessel is 1 at the origin") {
  for (double g : {-0.75, -0.5, -0.25, 0.0, 0.25, 1.0, 3.5}) CHECK(even_bessel(g, 0.0) == 1.0);
}

TEST_CASE("even_bessel zeros") {
  CHECK(std::abs(even_bessel(0.5, std::numbers::pi * std::numbers::pi)) < 1e-15);
  const double j01 = 2.404825557695772768621631879;
  CHECK(std::abs(even_bessel(0.0, j01 * j01)) < 1e-14);
}

TEST_CASE("half order is sin(z)/z") {
  double sup = 0.0;
  for (double w = 0.01; w < 40.0; w += 0.173) {
    sup = std::max(sup, std::abs(even_bessel(0.5, w) - std::sin(std::sqrt(w)) / std::sqrt(w)));
  }
  CHECK(sup < 1e-10);
  // negative argument gives sinh
  CHECK(even_bessel(0.5, -4.0) == doctest::Approx(std::sinh(2.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("agrees with std::cyl_bessel_j and std::cyl_bessel_i") {
  for (double g : {0.0, 0.25, 1.0, 2.5}) {
    for (double z : {0.1, 0.7, 1.5, 3.0, 4.5}) {
      CHECK(even_bessel(g, z * z) == doctest::Approx(oracle::jbar(g, z)).epsilon(1e-12));
      CHECK(even_bessel(g, -z * z) == doctest::Approx(oracle::ibar(g, z)).epsilon(1e-12));
    }
  }
}

TEST_CASE("negative orders against a long-double reference") {
  double sup = 0.0;
  for (double g : {-0.75, -0.5, -0.25}) {
    for (double w : {-9.0, -2.0, -0.3, 0.4, 1.0, 6.0, 16.0}) {
      const double ref = oracle::bessel_series(g, w);
      sup = std::max(sup, std::abs(even_bessel(g, w) - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  CHECK(sup < 1e-12);
}

TEST_CASE("negative orders against the reflection formulas") {
  for (double v : {0.25, 0.5, 0.75}) {
    for (double w : {-6.0, -0.5, 0.3, 2.0, 12.0}) {
      CHECK(even_bessel(-v, w) == doctest::Approx(oracle::even_bessel_neg(v, w)).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative recurrence") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> gd(-0.9, 3.0), wd(-10.0, 10.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double g = gd(rng), w = wd(rng);
    const double h = 1e-5;
    const double fd = (even_bessel(g, w + h) - even_bessel(g, w - h)) / (2.0 * h);
    const double rec = -even_bessel(g + 1.0, w) / (4.0 * (g + 1.0));
    worst = std::max(worst, std::abs(fd - rec) / std::max(std::abs(rec), 1e-3));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("even_bessel errors") {
  CHECK_THROWS_AS(even_bessel(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(even_bessel(-2.0, 0.5), DomainError);
  CHECK_THROWS_AS(even_bessel(0.0, 1e6), ConvergenceError);
  SeriesTolerance bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(even_bessel(0.0, 1.0, bad), DomainError);
}

TEST_CASE("wright_e examples") {
  CHECK(wright_e(1.0, 0.0, 1.0, 0.25, 0.0) == 0.0);
  CHECK(wright_e(1.0, 1.0, 1.0, 0.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(wright_e(2.0, 1.0, 1.0, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(wright_e(1.0, 1.0, 0.5, 0.5, 1.0), DomainError);
}

TEST_CASE("wright_e with b = 0 is an exponential") {
  double sup = 0.0;
  for (double d2 : {1.0, 0.5, 2.5}) {
    for (double z = -5.0; z <= 5.0; z += 0.25) {
      const double ref = std::exp(z) / std::tgamma(d2);
      sup = std::max(sup, std::abs(wright_e(1.0, d2, 1.0, 0.0, z) - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  CHECK(sup < 1e-10);
}

TEST_CASE("wright_e Mittag-Leffler special case") {
  // a = 1/2, b = 0, delta = 1 leaves E_{1/2}(z) = exp(z^2) erfc(-z)
  for (double z : {-1.5, -0.5, 0.3, 1.2}) {
    const double ref = std::exp(z * z) * std::erfc(-z);
    CHECK(wright_e(1.0, 1.0, 0.5, 0.0, z) == doctest::Approx(ref).epsilon(1e-12));
  }
}

}  // TEST_SUITE
