#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "critlab/operators.hpp"
#include "critlab/profiles.hpp"
#include "critlab/transform.hpp"

using namespace critlab;

namespace {

std::shared_ptr<const SpectralTransform> make_transform(const char* spec, int m,
                                                        double radius) {
  return std::make_shared<SpectralTransform>(parse_operator(spec), m, radius);
}

// Band-limited test vector: decaying seeded spectrum, upper half zeroed.
std::vector<double> seeded_spectrum(const SpectralTransform& t, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> ghat(t.size(), 0.0);
  for (int i = 0; i < t.size() / 2; ++i) {
    ghat[i] = unit(rng) * std::exp(-8.0 * i / t.size());
  }
  return ghat;
}

} // namespace

TEST_CASE("grid geometry") {
  const auto t = make_transform("free:3", 64, 20.0);
  CHECK(t->kind() == TransformKind::Hankel);
  CHECK(t->size() == 64);
  CHECK(t->radius() == doctest::Approx(20.0));
  // Nodes r_i = j_i R / S and k_i = j_i / R share the zero ladder, so
  // r_i k_j R-duality holds: k_i = r_i S / R^2.
  const double S = t->band_limit() * t->radius();
  for (int i = 0; i < t->size(); ++i) {
    CHECK(t->k()[i] == doctest::Approx(t->r()[i] * S / (20.0 * 20.0)).epsilon(1e-12));
    CHECK(t->r()[i] > 0.0);
    CHECK(t->r()[i] < 20.0);
  }
  CHECK_THROWS_AS(SpectralTransform(parse_operator("free:3"), 4, 20.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralTransform(parse_operator("free:3"), 64, -1.0),
                  std::invalid_argument);
}

TEST_CASE("Hankel forward matches the continuum transform of the Gaussian") {
  // Reduced free:3 Gaussian h = sqrt(r) e^{-r^2/2} is self-reciprocal:
  // hhat(k) = sqrt(k) e^{-k^2/2}.  The grid is chosen so the reference stays
  // well above the discrete transform's absolute rounding floor over the
  // checked band (k <= K/2).
  const auto t = make_transform("free:3", 40, 16.0);
  const SampledFunction g = SampledFunction::from_profile(t, gaussian_profile(1.0));
  const std::vector<double> ghat = t->forward(g.h);
  for (int i = 0; i < t->size(); ++i) {
    const double k = t->k()[i];
    if (k > 0.5 * t->band_limit()) break;
    const double ref = std::sqrt(k) * std::exp(-0.5 * k * k);
    CHECK(ghat[i] == doctest::Approx(ref).epsilon(1e-6).scale(1e-4));
  }
}

TEST_CASE("cosine forward matches the continuum transform of the Gaussian") {
  // Line even sector: ghat(k) = e^{-k^2/2}; the midpoint grid needs enough
  // columns that the alias partner at 2 pi / dr - k is negligible.
  const auto t = make_transform("free1d", 512, 40.0);
  const SampledFunction g = SampledFunction::from_profile(t, gaussian_profile(1.0));
  const std::vector<double> ghat = t->forward(g.h);
  for (int i = 0; i < t->size(); ++i) {
    const double k = t->k()[i];
    const double ref = std::exp(-0.5 * k * k);
    if (ref < 1e-6) break;
    CHECK(ghat[i] == doctest::Approx(ref).epsilon(1e-8).scale(1e-5));
  }
}

TEST_CASE("round trip and Plancherel on seeded band-limited data") {
  for (const char* spec : {"free1d", "free:2", "free:3", "free:5", "hardy:3:1",
                           "hardy:3:-0.25"}) {
    CAPTURE(spec);
    const auto t = make_transform(spec, 256, 40.0);
    for (unsigned seed : {1u, 2u, 3u}) {
      const std::vector<double> ghat = seeded_spectrum(*t, seed);
      const std::vector<double> h = t->inverse(ghat);
      const std::vector<double> back = t->forward(h);
      double num = 0.0, den = 0.0;
      for (int i = 0; i < t->size(); ++i) {
        num += (back[i] - ghat[i]) * (back[i] - ghat[i]);
        den += ghat[i] * ghat[i];
      }
      CHECK(std::sqrt(num / den) < 1e-8);

      const SpectralFunction xs{t, ghat};
      const SampledFunction xp{t, h, std::nullopt, true};
      CHECK(xp.norm() == doctest::Approx(xs.norm()).epsilon(1e-8));
    }
  }
}

TEST_CASE("physical norm of the Gaussian matches its closed form") {
  // ||e^{-r^2/2}||^2 over R^3 is pi^{3/2}; over the line it is sqrt(pi).
  const auto t3 = make_transform("free:3", 256, 40.0);
  const SampledFunction g3 = SampledFunction::from_profile(t3, gaussian_profile(1.0));
  CHECK(g3.norm() == doctest::Approx(std::pow(M_PI, 0.75)).epsilon(1e-10));

  const auto t1 = make_transform("free1d", 256, 40.0);
  const SampledFunction g1 = SampledFunction::from_profile(t1, gaussian_profile(1.0));
  CHECK(g1.norm() == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-10));
}

TEST_CASE("reduction weight and physical values") {
  const auto t5 = make_transform("free:5", 64, 30.0);
  CHECK(t5->reduce_weight(2.0) == doctest::Approx(std::pow(2.0, 1.5)));
  const auto t2 = make_transform("free:2", 64, 30.0);
  CHECK(t2->reduce_weight(7.0) == doctest::Approx(1.0));

  const SampledFunction g = SampledFunction::from_profile(t5, bump_profile(5.0, 2.0));
  const RadialProfile p = bump_profile(5.0, 2.0);
  for (int i = 0; i < t5->size(); i += 7) {
    CHECK(g.value(i) == doctest::Approx(p.value(t5->r()[i])).scale(1.0));
  }
  CHECK(g.tail_resolved);
}

TEST_CASE("off-grid spectrum evaluation continues the discrete forward") {
  const auto t = make_transform("free:3", 128, 40.0);
  const SampledFunction g = SampledFunction::from_profile(t, gaussian_profile(1.0));
  SUBCASE("agrees with the grid transform at the nodes") {
    const std::vector<double> ghat = t->forward(g.h);
    for (int i : {0, 5, 40}) {
      CHECK(t->ghat_at(g.h, t->k()[i]) == doctest::Approx(ghat[i]).epsilon(1e-9));
    }
  }
  SUBCASE("matches the continuum transform between and below the nodes") {
    for (double k : {0.001, 0.01, 0.3, 1.7}) {
      const double ref = std::sqrt(k) * std::exp(-0.5 * k * k);
      CHECK(t->ghat_at(g.h, k) == doctest::Approx(ref).epsilon(1e-6));
    }
  }
  SUBCASE("rejects frequencies outside the band") {
    CHECK_THROWS_AS(t->ghat_at(g.h, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(t->ghat_at(g.h, 2.0 * t->band_limit()), std::invalid_argument);
  }
}

TEST_CASE("multiplier application and linear combinations") {
  const auto t = make_transform("free:2", 64, 20.0);
  const SampledFunction g = SampledFunction::from_profile(t, bump_profile(3.0, 1.0));
  const SpectralFunction gh = forward(g);
  const SpectralFunction damped = apply_multiplier(gh, [](double k) {
    return std::exp(-k * k);
  });
  for (int i = 0; i < t->size(); ++i) {
    const double k = t->k()[i];
    CHECK(damped.ghat[i] == doctest::Approx(std::exp(-k * k) * gh.ghat[i]).scale(1e-12));
  }

  const SampledFunction sum = linear_combination(1.0, g, -1.0, g);
  for (double hi : sum.h) CHECK(hi == 0.0);

  const auto other = make_transform("free:2", 64, 21.0);
  const SampledFunction g2 = SampledFunction::from_profile(other, bump_profile(3.0, 1.0));
  CHECK_THROWS_AS(linear_combination(1.0, g, 1.0, g2), std::invalid_argument);
}

TEST_CASE("profile grammar") {
  CHECK(parse_profile("gaussian(2)").value(0.0) == doctest::Approx(1.0));
  CHECK(parse_profile("bump(3,1)").value(5.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(parse_profile("bump(3,1)").support_radius == doctest::Approx(4.0));
  const RadialProfile ann = parse_profile("annulus(1,4)");
  CHECK(ann.value(0.5) == doctest::Approx(0.0).scale(1.0));
  CHECK(ann.value(2.5) > 0.0);
  CHECK(ann.compactly_supported);
  CHECK_THROWS_AS(parse_profile("triangle(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("gaussian(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("annulus(4,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("bump(3;1)"), std::invalid_argument);
}
