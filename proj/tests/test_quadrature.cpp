#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "critlab/quadrature.hpp"

using namespace critlab;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  std::vector<double> x, w;
  for (int n : {1, 2, 5, 16, 32}) {
    gauss_legendre(n, -1.0, 3.0, x, w);
    REQUIRE(static_cast<int>(x.size()) == n);
    double wsum = 0.0;
    for (double wi : w) wsum += wi;
    CHECK(wsum == doctest::Approx(4.0).epsilon(1e-14));
    // Monomial x^(2n-1) over [-1, 3]: (3^(2n) - 1)/(2n).
    const int p = 2 * n - 1;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += w[i] * std::pow(x[i], p);
    const double exact = (std::pow(3.0, p + 1) - std::pow(-1.0, p + 1)) / (p + 1);
    CHECK(acc == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("composite rule on smooth integrands") {
  const double s = integrate_gl([](double t) { return std::sin(t); }, 0.0, M_PI, 0.5);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  const double g = integrate_gl([](double t) { return std::exp(-t * t); }, 0.0, 10.0, 0.25);
  CHECK(g == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("Hermite panel integral is exact for cubics") {
  const std::vector<double> x{0.0, 0.7, 1.1, 2.0, 3.5};
  std::vector<double> f(x.size()), df(x.size());
  // f = 2x^3 - x^2 + 4x - 1, integral F = x^4/2 - x^3/3 + 2x^2 - x.
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i];
    f[i] = 2 * t * t * t - t * t + 4 * t - 1;
    df[i] = 6 * t * t - 2 * t + 4;
  }
  auto F = [](double t) {
    return t * t * t * t / 2 - t * t * t / 3 + 2 * t * t - t;
  };
  CHECK(hermite_integral(x, f, df) == doctest::Approx(F(3.5) - F(0.0)).epsilon(1e-14));
}

TEST_CASE("Filon rule against closed-form oscillatory integrals") {
  // f = x^2 is captured exactly by the cubic model, so the only error is
  // roundoff: Int_0^1 x^2 cos(w x) dx = 2x cos(wx)/w^2 + (w^2 x^2 - 2) sin(wx)/w^3.
  auto exact = [](double w) {
    return 2.0 * std::cos(w) / (w * w) + (w * w - 2.0) * std::sin(w) / (w * w * w);
  };
  std::vector<double> x, f, df;
  const int n = 41;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    x.push_back(t);
    f.push_back(t * t);
    df.push_back(2.0 * t);
  }
  for (double w : {0.05, 1.0, 12.0, 80.0, 400.0}) {
    CHECK(filon_cos(x, f, df, w) == doctest::Approx(exact(w)).epsilon(1e-12).scale(1e-4));
  }
}

TEST_CASE("Filon phase offset") {
  // Int_0^pi cos(x + pi/2) dx = -2 with f = 1.
  const std::vector<double> x{0.0, M_PI / 2, M_PI};
  const std::vector<double> f{1.0, 1.0, 1.0};
  const std::vector<double> df{0.0, 0.0, 0.0};
  CHECK(filon_cos(x, f, df, 1.0, M_PI / 2) == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("Filon small-omega fallback matches the plain integral") {
  std::vector<double> x, f, df;
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 * i;
    x.push_back(t);
    f.push_back(std::exp(-t));
    df.push_back(-std::exp(-t));
  }
  // omega -> 0 turns the rule into the Hermite integral of f.
  CHECK(filon_cos(x, f, df, 1e-12) ==
        doctest::Approx(hermite_integral(x, f, df)).epsilon(1e-10));
  // Int_0^2 e^-x cos(0.05 x) dx, exact e^-x(a sin(ax) - cos(ax))/(1+a^2) form.
  const double a = 0.05;
  auto anti = [a](double t) {
    return std::exp(-t) * (a * std::sin(a * t) - std::cos(a * t)) / (1 + a * a);
  };
  // Accuracy is limited by the cubic-Hermite model of e^-x on h=0.1 panels
  // (~3e-7 relative), not by the oscillatory machinery.
  CHECK(filon_cos(x, f, df, a) == doctest::Approx(anti(2.0) - anti(0.0)).epsilon(1e-6));
}

TEST_CASE("finite-difference slopes are exact for quadratics") {
  const std::vector<double> x{0.5, 0.9, 2.0, 2.2, 4.0};
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = 3 * x[i] * x[i] - 2 * x[i] + 7;
  const std::vector<double> df = grid_derivatives(x, f);
  REQUIRE(df.size() == x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(df[i] == doctest::Approx(6 * x[i] - 2).epsilon(1e-12));
  }
}
