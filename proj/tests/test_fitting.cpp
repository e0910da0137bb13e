#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "critlab/fitting.hpp"

using namespace critlab;

namespace {

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  std::vector<double> t;
  const int n = static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade));
  for (int i = 0; i <= n; ++i) t.push_back(lo * std::pow(hi / lo, double(i) / n));
  return t;
}

} // namespace

TEST_CASE("log-log slope on exact power laws") {
  const std::vector<double> t = log_grid(1.0, 1e4, 16);
  std::vector<double> f(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) f[i] = 2.5 * std::pow(t[i], -0.75);
  double resid = 1.0;
  CHECK(log_log_slope(t, f, 1.0, &resid) == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(resid < 1e-12);
}

TEST_CASE("slope window uses only the tail") {
  const std::vector<double> t = log_grid(1.0, 1e4, 16);
  std::vector<double> f(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    // Garbage head, clean t^{1/2} tail over the last decade.
    f[i] = t[i] < 1e3 ? 1.0 + std::sin(7.0 * t[i]) * 0.5 : std::sqrt(t[i]);
  }
  CHECK(log_log_slope(t, f, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("three-way growth fit identifies synthetic laws") {
  const std::vector<double> t = log_grid(0.1, 1e4, 16);
  std::vector<double> n(t.size());

  SUBCASE("power growth") {
    for (std::size_t i = 0; i < t.size(); ++i) n[i] = 3.0 * std::pow(t[i], 0.5);
    const GrowthFit fit = fit_growth(t, n);
    CHECK(fit.model == GrowthModel::Power);
    CHECK(fit.parameter == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(fit.residual_sqrtlog > 10.0 * std::max(fit.residual_power, 1e-12));
    CHECK(fit.residual_bounded > 10.0 * std::max(fit.residual_power, 1e-12));
  }

  SUBCASE("square-root-of-log growth") {
    for (std::size_t i = 0; i < t.size(); ++i) {
      n[i] = std::sqrt(2.0 + 4.0 * std::log(t[i] + 3.0));
    }
    const GrowthFit fit = fit_growth(t, n);
    CHECK(fit.model == GrowthModel::SqrtLog);
    CHECK(fit.parameter == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(fit.residual_power > 10.0 * fit.residual_sqrtlog);
    CHECK(fit.residual_bounded > 10.0 * fit.residual_sqrtlog);
  }

  SUBCASE("bounded curve with a decaying ripple") {
    for (std::size_t i = 0; i < t.size(); ++i) {
      n[i] = 7.0 + 0.01 * std::cos(t[i]) / (1.0 + t[i]);
    }
    const GrowthFit fit = fit_growth(t, n);
    CHECK(fit.model == GrowthModel::Bounded);
    CHECK(fit.parameter == doctest::Approx(7.0).epsilon(1e-4));
  }

  SUBCASE("a flat curve is Bounded, not a zero-slope power law") {
    for (std::size_t i = 0; i < t.size(); ++i) n[i] = 2.0;
    const GrowthFit fit = fit_growth(t, n);
    CHECK(fit.model == GrowthModel::Bounded);
    CHECK(fit.parameter == doctest::Approx(2.0));
  }
}

TEST_CASE("residual accessor matches the fields") {
  const std::vector<double> t = log_grid(1.0, 1e3, 8);
  std::vector<double> n(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) n[i] = std::pow(t[i], 0.3);
  const GrowthFit fit = fit_growth(t, n);
  CHECK(fit.residual(GrowthModel::Power) == fit.residual_power);
  CHECK(fit.residual(GrowthModel::SqrtLog) == fit.residual_sqrtlog);
  CHECK(fit.residual(GrowthModel::Bounded) == fit.residual_bounded);
}

TEST_CASE("model names") {
  CHECK(growth_model_name(GrowthModel::Power) == "power");
  CHECK(growth_model_name(GrowthModel::SqrtLog) == "sqrtlog");
  CHECK(growth_model_name(GrowthModel::Bounded) == "bounded");
}
