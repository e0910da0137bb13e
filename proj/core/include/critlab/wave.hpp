#pragma once

#include <vector>

#include "critlab/density.hpp"
#include "critlab/fitting.hpp"
#include "critlab/semigroup.hpp"
#include "critlab/transform.hpp"

namespace critlab {

// Spectral state of the wave equation w_tt + S w = 0, w(0) = 0, w_t(0) = g:
// what = sin(t k)/k ghat and vhat = cos(t k) ghat mode by mode.
struct WaveState {
  std::shared_ptr<const SpectralTransform> transform;
  double t = 0.0;
  std::vector<double> what;
  std::vector<double> vhat;

  double norm() const;     // ||w(t)||
  double energy() const;   // ||w_t||^2 + ||S^(1/2) w||^2
};

// Grid-resolved wave state.  Guarded by k_1 t <= pi M / 4: past that point
// the grid's mode phases decohere (the discrete spectrum echoes), and the
// error message names the grid size that would resolve the request.
WaveState wave_evolve(const SampledFunction& g, double t);

// ||w(t)|| on a time grid from the extended spectral density (valid past the
// grid echo time), plus the three-way growth fit on the tail window.
struct DecayCurve {
  std::vector<double> t;
  std::vector<double> value;
  GrowthFit fit;
};

DecayCurve wave_decay_curve(const SampledFunction& g,
                            const std::vector<double>& t_grid,
                            double window_decades = 1.0);

// sup_t t^(2 alpha - 1) ||w(t)|| against 2^(1/2 + alpha(1 - 2 alpha)) times
// the range seminorm of g at alpha.
struct DispersiveBound {
  double alpha = 0.0;
  double constant = 0.0;      // 2^(1/2 + alpha (1 - 2 alpha))
  double seminorm = 0.0;      // frequency-route seminorm of g
  double sup_weighted = 0.0;  // max over the grid of t^(2 alpha - 1) ||w(t)||
  double worst_t = 0.0;
  bool holds = false;         // sup_weighted <= constant * seminorm + 1e-8
};

DispersiveBound wave_bound_check(const SampledFunction& g, double alpha,
                                 const std::vector<double>& t_grid,
                                 const SpectralDensity* density = nullptr);

// Relative spectral deviation between exp(-tA) g and the subordination
// integral (1/2) pi^(-1/2) t^(-3/2) Int_0^inf sigma exp(-sigma^2/4t) w(sigma) dsigma
// of the wave states.  Mode by mode the two sides differ only by quadrature
// error, so the deviation is reported as a weighted l^2 ratio over modes.
// The sigma grid is log-spaced below sqrt(t) and linearly spaced above, with
// points_per_decade nodes per decade; sigma_max defaults to 10 sqrt(t) and
// must be at least that.
double transmutation_error(const SampledFunction& g, double t,
                           double sigma_max = 0.0, int points_per_decade = 64);

// ||x|| <= 2^(1/2 + alpha(1 - 2 alpha)) |||A^(1/2) x|||^(2 alpha) |||x|||^(1 - 2 alpha)
// evaluated on the discrete spectral measure, where |||.||| is the
// frequency-route seminorm at alpha.  ratio = lhs / rhs; at alpha = 1/2 the
// bound collapses to the identity ||x|| = sqrt(2) |||A^(1/2) x|||.
struct InterpolationResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double seminorm_half = 0.0;  // |||A^(1/2) x||| at alpha
  double seminorm_x = 0.0;     // |||x||| at alpha
};

InterpolationResult interpolation_check(const SpectralFunction& x, double alpha);

// Critical inverse-square data h = r^((N-2)/2) g reinterpreted as radial data
// in the plane: both operators share the order-zero transform, so the wave
// norms differ by the exact measure ratio omega_{N-1} / omega_1.
SampledFunction reduce_to_2d(const SampledFunction& g);

} // namespace critlab
