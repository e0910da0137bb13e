#pragma once

#include <string>
#include <vector>

namespace critlab {

enum class GrowthModel { Power, SqrtLog, Bounded };

std::string growth_model_name(GrowthModel m);

// Winner of the three-way fit on the tail window plus each candidate's
// misfit (relative RMS in norm space).  parameter holds the power exponent,
// the squared-log slope, or the window supremum, by model.
struct GrowthFit {
  GrowthModel model = GrowthModel::Bounded;
  double parameter = 0.0;
  double residual_power = 0.0;
  double residual_sqrtlog = 0.0;
  double residual_bounded = 0.0;

  double residual(GrowthModel m) const;
};

// Fits norm(t) ~ c t^e, norm(t)^2 ~ a + b ln t, and norm(t) ~ const on the
// last window_decades of the time grid and keeps the smallest residual.
// Power and SqrtLog are genuine growth laws here: their slopes are kept away
// from zero (e >= 0.05, b >= 0.1 mean(n^2)/window), so a flat curve is fit
// best by Bounded rather than by a degenerate zero-slope copy of the others.
GrowthFit fit_growth(const std::vector<double>& t, const std::vector<double>& norm,
                     double window_decades = 1.0);

// Unconstrained least-squares slope of log f against log t over the last
// window_decades; the workhorse behind decay-rate and tail-slope estimates.
// If residual is non-null it receives the RMS misfit of the line in log space.
double log_log_slope(const std::vector<double>& t, const std::vector<double>& f,
                     double window_decades, double* residual = nullptr);

} // namespace critlab
