#pragma once

#include <vector>

#include "critlab/transform.hpp"

namespace critlab {

// Continuum spectral density |ghat(k)|^2 of one sampled function, against the
// diagonalizing measure c_mu k^d dk (d = 1 for radial kinds, d = 0 for the
// line).  The transform nodes are extended below the first grid frequency by
// log-spaced nodes whose values come from the same discrete forward
// functional evaluated off-grid, so quantities that live at frequencies the
// bare grid cannot see (heat decay at large t, wave norms past the echo time
// t ~ R) stay resolved; below the deepest node a fitted power law
// |ghat|^2 ~ c k^(2p) closes the integrals analytically.
//
// t_max fixes how deep the extension reaches: the smallest node satisfies
// k_lo <= 0.25 / t_max, so heat and wave weights are still flat across the
// analytic chunk at every t <= t_max.
class SpectralDensity {
 public:
  SpectralDensity(const SampledFunction& g, double t_max);

  double t_max() const { return t_max_; }
  int measure_power() const { return d_; }

  // ||exp(-tS) g||^2, valid for 0 <= t <= t_max.
  double heat_norm_sq(double t) const;

  // ||sin(t sqrt(S))/sqrt(S) g||^2, valid for 0 <= t <= t_max.
  double wave_norm_sq(double t) const;

  // Int k^(-4 alpha) |ghat|^2 dmu, the frequency-side seminorm integral
  // without its Gamma(2 alpha) 2^(-2 alpha) prefactor.  Only meaningful when
  // the small-k power law says the integral converges; the caller decides.
  double alpha_weighted_sq(double alpha) const;

  // Int |ghat|^2 dmu.
  double norm_sq() const;

  // Int k^2 |ghat|^2 dmu = <S g, g>.
  double energy_form() const;

  // Small-k power-law fit |ghat(k)| ~ sqrt(c) k^p on the three deepest nodes.
  double small_k_exponent() const { return p_; }
  bool small_k_fit_ok() const { return fit_ok_; }

  const std::vector<double>& nodes() const { return k_; }
  const std::vector<double>& values() const { return f_; }

 private:
  void check_time(double t) const;
  double chunk_power_integral(double exponent) const;  // Int_0^klo c k^e dk

  double t_max_ = 0.0;
  double cmu_ = 0.0;
  int d_ = 1;
  double k_lo_ = 0.0;
  double c_ = 0.0;      // fitted |ghat|^2 coefficient
  double p_ = 0.0;      // fitted |ghat| exponent
  bool fit_ok_ = false;
  std::vector<double> k_, u_, f_, df_;   // u = ln k, df = df/dk
};

} // namespace critlab
