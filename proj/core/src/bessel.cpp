#include "critlab/bessel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace critlab {

namespace {

constexpr double kMaxOrder = 50.0;
const long double kPi = 3.14159265358979323846264338327950288L;

void check_order_arg(double nu, double x) {
  if (!(nu >= 0.0) || !(nu <= kMaxOrder)) {
    std::ostringstream msg;
    msg << "Bessel order nu (" << nu << ") must lie in [0, " << kMaxOrder << "]";
    throw std::invalid_argument(msg.str());
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "Bessel argument x (" << x << ") must be finite and nonnegative";
    throw std::invalid_argument(msg.str());
  }
}

// Hankel expansion at a single order; valid once x is comfortably beyond
// 2 nu^2.  Truncated at the smallest term.
long double hankel_expansion(long double nu, long double x) {
  const long double mu = 4.0L * nu * nu;
  long double c = 1.0L;
  long double p = 1.0L;
  long double q = 0.0L;
  long double prev = std::numeric_limits<long double>::max();
  for (int k = 1; k <= 40; ++k) {
    const long double num = mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
    c *= num / (8.0L * x * k);
    if (fabsl(c) >= prev) break;
    prev = fabsl(c);
    const int phase = (k / 2) % 2;       // sign pattern + + - - + + ...
    const long double term = phase ? -c : c;
    if (k % 2 == 0) {
      p += term;
    } else {
      q += term;
    }
    if (fabsl(c) < 1e-22L) break;
  }
  const long double omega = x - (0.5L * nu + 0.25L) * kPi;
  return sqrtl(2.0L / (kPi * x)) * (cosl(omega) * p - sinl(omega) * q);
}

long double power_series(long double nu, long double x) {
  if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
  const long double q = 0.25L * x * x;
  long double term = expl(nu * logl(0.5L * x) - lgammal(nu + 1.0L));
  long double sum = term;
  long double peak = fabsl(term);
  for (int m = 0; m < 500; ++m) {
    term *= -q / ((m + 1.0L) * (m + 1.0L + nu));
    sum += term;
    peak = std::max(peak, fabsl(term));
    if (fabsl(term) < 1e-26L * peak && 2.0L * m > x) break;
  }
  return sum;
}

// Large-x value at order nu > sqrt(x/2): seed with the expansion at the
// fractional part of nu and recur upward.  Stable while nu stays within
// about 2.5 x^(1/3) past the turning point nu = x.
long double recur_up(long double nu, long double x) {
  const long double mu0 = nu - floorl(nu);
  const int steps = static_cast<int>(floorl(nu) + 0.5L);
  long double jm = hankel_expansion(mu0, x);
  long double jp = hankel_expansion(mu0 + 1.0L, x);
  if (steps == 0) return jm;
  long double order = mu0 + 1.0L;
  for (int s = 1; s < steps; ++s) {
    const long double jn = (2.0L * order / x) * jp - jm;
    jm = jp;
    jp = jn;
    order += 1.0L;
  }
  return jp;
}

} // namespace

namespace detail {

double bessel_j_series(double nu, double x) {
  check_order_arg(nu, x);
  return static_cast<double>(power_series(nu, x));
}

double bessel_j_asymptotic(double nu, double x) {
  check_order_arg(nu, x);
  if (x <= 0.0) {
    std::ostringstream msg;
    msg << "asymptotic branch needs x > 0, got " << x;
    throw std::invalid_argument(msg.str());
  }
  if (2.0 * nu * nu <= x) return static_cast<double>(hankel_expansion(nu, x));
  return static_cast<double>(recur_up(nu, x));
}

double bessel_crossover(double nu) {
  return std::max(12.0, 2.0 * nu * nu);
}

} // namespace detail

double bessel_j(double nu, double x) {
  check_order_arg(nu, x);
  if (x < 12.0) return static_cast<double>(power_series(nu, x));
  if (2.0 * nu * nu <= x) return static_cast<double>(hankel_expansion(nu, x));
  if (nu <= x + 2.5 * std::cbrt(x)) return static_cast<double>(recur_up(nu, x));
  return static_cast<double>(power_series(nu, x));
}

std::vector<double> bessel_zeros(double nu, int n) {
  check_order_arg(nu, 0.0);
  if (n < 0) {
    std::ostringstream msg;
    msg << "zero count n (" << n << ") must be nonnegative";
    throw std::invalid_argument(msg.str());
  }
  std::vector<double> zeros;
  zeros.reserve(n);
  const double mu = 4.0 * nu * nu;
  double prev = nu > 0.0 ? std::sqrt(nu * (nu + 2.0)) * 0.99 : 1e-3;
  for (int k = 1; k <= n; ++k) {
    const double beta = (k + 0.5 * nu - 0.25) * M_PI;
    double guess = beta - (mu - 1.0) / (8.0 * beta)
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * beta, 3));
    double a = std::max(prev + 1e-9, guess - 0.5 * M_PI);
    double b = guess + 0.5 * M_PI;
    double fa = bessel_j(nu, a);
    double fb = bessel_j(nu, b);
    if (fa * fb > 0.0) {
      // McMahon failed to bracket (large order, low zero index): march from
      // the previous zero in small steps until the sign flips.
      a = prev + 1e-9;
      fa = bessel_j(nu, a);
      b = a;
      do {
        a = b;
        fa = bessel_j(nu, a);
        b = a + M_PI / 8.0;
        fb = bessel_j(nu, b);
      } while (fa * fb > 0.0 && b < prev + 200.0);
      if (fa * fb > 0.0) {
        std::ostringstream msg;
        msg << "failed to bracket zero " << k << " of J_" << nu;
        throw std::runtime_error(msg.str());
      }
    }
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, b); ++it) {
      const double m = 0.5 * (a + b);
      const double fm = bessel_j(nu, m);
      if (fa * fm <= 0.0) {
        b = m;
        fb = fm;
      } else {
        a = m;
        fa = fm;
      }
    }
    prev = 0.5 * (a + b);
    zeros.push_back(prev);
  }
  return zeros;
}

double wave_multiplier(double t, double k) {
  const double u = t * k;
  if (std::fabs(u) < 1e-4) {
    const double u2 = u * u;
    return t * (1.0 - u2 / 6.0 + u2 * u2 / 120.0);
  }
  return std::sin(u) / k;
}

} // namespace critlab
