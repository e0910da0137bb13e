#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "critlab/bessel.hpp"

using namespace critlab;

TEST_CASE("J_0 reference values") {
  // Abramowitz & Stegun table values.
  CHECK(bessel_j(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bessel_j(0.0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-13));
  CHECK(bessel_j(0.0, 2.404825557695773) == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(bessel_j(0.0, 5.0) == doctest::Approx(-0.1775967713143383).epsilon(1e-12));
  CHECK(bessel_j(0.0, 100.0) == doctest::Approx(0.0199858503042231).epsilon(1e-10));
}

TEST_CASE("half-integer order reduces to elementary functions") {
  // J_{1/2}(x) = sqrt(2/(pi x)) sin x, J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x).
  for (double x : {0.1, 0.5, 1.0, 3.0, 7.0, 11.9, 12.1, 40.0, 250.0}) {
    const double ref_half = std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
    CHECK(bessel_j(0.5, x) == doctest::Approx(ref_half).epsilon(5e-13).scale(0.1));
    const double ref_three =
        std::sqrt(2.0 / (M_PI * x)) * (std::sin(x) / x - std::cos(x));
    CHECK(bessel_j(1.5, x) == doctest::Approx(ref_three).epsilon(5e-13).scale(0.1));
  }
}

TEST_CASE("agreement with std::cyl_bessel_j across orders and regimes") {
  // The standard library provides an independent implementation; compare on
  // a grid spanning both sides of the series/asymptotic crossover.
  for (double nu : {0.0, 1.0, 0.5, 2.0, 3.7, 10.6, 17.0}) {
    for (double x : {0.2, 1.0, 4.0, 11.0, 13.0, 25.0, 60.0, 180.0}) {
      const double ref = std::cyl_bessel_j(nu, x);
      CHECK(bessel_j(nu, x) == doctest::Approx(ref).epsilon(2e-10).scale(0.05));
    }
  }
}

TEST_CASE("crossover seam is continuous") {
  for (double nu : {0.0, 0.5, 1.0, 2.5}) {
    const double xc = detail::bessel_crossover(nu);
    const double below = bessel_j(nu, xc * (1.0 - 1e-9));
    const double above = bessel_j(nu, xc * (1.0 + 1e-9));
    // |J'| <= 1, so the function itself moves by up to ~2.4e-8 between the
    // probe points; anything further is a regime mismatch.
    CHECK(std::fabs(below - above) < 1e-7);
    // Both regimes are accurate at the seam itself.
    CHECK(detail::bessel_j_series(nu, xc) ==
          doctest::Approx(detail::bessel_j_asymptotic(nu, xc)).epsilon(1e-10).scale(0.05));
  }
}

TEST_CASE("zeros of J_0 and J_1") {
  const std::vector<double> z0 = bessel_zeros(0.0, 5);
  REQUIRE(z0.size() == 5);
  CHECK(z0[0] == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(z0[1] == doctest::Approx(5.520078110286311).epsilon(1e-12));
  CHECK(z0[4] == doctest::Approx(14.93091770848779).epsilon(1e-12));
  const std::vector<double> z1 = bessel_zeros(1.0, 3);
  CHECK(z1[0] == doctest::Approx(3.831705970207512).epsilon(1e-12));
  CHECK(z1[2] == doctest::Approx(10.17346813506272).epsilon(1e-12));
}

TEST_CASE("zeros of J_{1/2} are the multiples of pi") {
  const std::vector<double> z = bessel_zeros(0.5, 40);
  REQUIRE(z.size() == 40);
  for (int n = 0; n < 40; ++n) {
    CHECK(z[n] == doctest::Approx((n + 1) * M_PI).epsilon(1e-12));
  }
}

TEST_CASE("zeros are simple roots in increasing order") {
  for (double nu : {0.0, 0.5, 1.118033988749895, 3.0}) {
    const std::vector<double> z = bessel_zeros(nu, 30);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) CHECK(z[i] < z[i + 1]);
    for (double root : z) {
      CHECK(std::fabs(bessel_j(nu, root)) < 1e-10);
      // A genuine sign change happens across each root.
      CHECK(bessel_j(nu, root - 1e-4) * bessel_j(nu, root + 1e-4) < 0.0);
    }
  }
}

TEST_CASE("McMahon asymptotics for deep zeros") {
  // j_{nu,n} -> (n + nu/2 - 1/4) pi for large n.
  const std::vector<double> z = bessel_zeros(1.0, 200);
  const double guess = (200.0 + 0.5 - 0.25) * M_PI;
  CHECK(z[199] == doctest::Approx(guess).epsilon(1e-6));
}

TEST_CASE("wave multiplier handles the removable singularity") {
  CHECK(wave_multiplier(2.0, 1e-9) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(wave_multiplier(0.0, 3.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(wave_multiplier(3.0, 2.0) == doctest::Approx(std::sin(6.0) / 2.0).epsilon(1e-14));
  // Series branch and direct branch agree at the switch point.
  const double k = 1e-4 / 1.7;
  CHECK(wave_multiplier(1.7, k * (1.0 - 1e-6)) ==
        doctest::Approx(wave_multiplier(1.7, k * (1.0 + 1e-6))).epsilon(1e-10));
}
