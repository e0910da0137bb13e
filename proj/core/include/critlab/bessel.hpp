#pragma once

#include <vector>

namespace critlab {

// Bessel function of the first kind J_nu(x), real order 0 <= nu <= 50, x >= 0.
// Two evaluation regimes with a documented crossover at x* = max(12, 2 nu^2):
// an ascending power series below it and the Hankel large-argument expansion
// above it.  For orders past sqrt(6) the plain expansion at order nu is not
// accurate enough at the crossover, so the large-x side is reached from
// fractional base orders mu, mu+1 (mu = nu - floor(nu)) by upward recurrence;
// beyond the recurrence stability limit nu > x + 2.5 x^(1/3) the series takes
// over again.  All accumulation is in long double.
double bessel_j(double nu, double x);

// First n positive zeros of J_nu in increasing order.  McMahon guesses give
// the brackets, bisection refines each root to about 1e-12.
std::vector<double> bessel_zeros(double nu, int n);

// sin(t k)/k with the removable singularity at k = 0 handled by a series
// branch for |t k| < 1e-4.
double wave_multiplier(double t, double k);

namespace detail {

// Each regime on its own, exposed so tests can probe the crossover seam.
double bessel_j_series(double nu, double x);
double bessel_j_asymptotic(double nu, double x);
double bessel_crossover(double nu);

} // namespace detail

} // namespace critlab
