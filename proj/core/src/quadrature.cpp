#include "critlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace critlab {

namespace {

void check_grid(const std::vector<double>& x, const std::vector<double>& f,
                const std::vector<double>& df) {
  if (x.size() < 2 || x.size() != f.size() || x.size() != df.size()) {
    std::ostringstream msg;
    msg << "quadrature grid sizes disagree: x " << x.size() << ", f " << f.size()
        << ", df " << df.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      std::ostringstream msg;
      msg << "quadrature nodes must increase strictly, node " << i << " ("
          << x[i] << ") after " << x[i - 1];
      throw std::invalid_argument(msg.str());
    }
  }
}

// Unit-interval [-1, 1] Gauss-Legendre rule, Newton iteration on P_n.
const std::pair<std::vector<double>, std::vector<double>>& unit_rule(int n) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

} // namespace

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& x, std::vector<double>& w) {
  if (n < 1 || n > 256) {
    std::ostringstream msg;
    msg << "Gauss-Legendre point count n (" << n << ") must lie in [1, 256]";
    throw std::invalid_argument(msg.str());
  }
  const auto& rule = unit_rule(n);
  x.resize(n);
  w.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * rule.first[i];
    w[i] = half * rule.second[i];
  }
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double max_panel, int points_per_panel) {
  if (!(b >= a)) {
    std::ostringstream msg;
    msg << "integration range [" << a << ", " << b << "] is inverted";
    throw std::invalid_argument(msg.str());
  }
  if (!(max_panel > 0.0)) {
    std::ostringstream msg;
    msg << "max_panel (" << max_panel << ") must be positive";
    throw std::invalid_argument(msg.str());
  }
  if (a == b) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
  const double h = (b - a) / panels;
  std::vector<double> x, w;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    gauss_legendre(points_per_panel, a + p * h, a + (p + 1) * h, x, w);
    for (int i = 0; i < points_per_panel; ++i) total += w[i] * f(x[i]);
  }
  return total;
}

double hermite_integral(const std::vector<double>& x,
                        const std::vector<double>& f,
                        const std::vector<double>& df) {
  check_grid(x, f, df);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = x[i + 1] - x[i];
    total += 0.5 * h * (f[i] + f[i + 1]) + h * h / 12.0 * (df[i] - df[i + 1]);
  }
  return total;
}

double filon_cos(const std::vector<double>& x,
                 const std::vector<double>& f,
                 const std::vector<double>& df,
                 double omega, double phase) {
  check_grid(x, f, df);
  double total = 0.0;
  std::vector<double> gx, gw;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i];
    const double b = x[i + 1];
    const double h = b - a;
    const double fa = f[i], fb = f[i + 1];
    const double da = df[i], db = df[i + 1];
    // Hermite cubic p(s) about s = sigma - a.
    const double c0 = fa;
    const double c1 = da;
    const double c2 = (3.0 * (fb - fa) / h - 2.0 * da - db) / h;
    const double c3 = (2.0 * (fa - fb) / h + da + db) / (h * h);
    if (std::fabs(omega) * h < 0.2) {
      gauss_legendre(5, a, b, gx, gw);
      for (int q = 0; q < 5; ++q) {
        const double s = gx[q] - a;
        const double p = c0 + s * (c1 + s * (c2 + s * c3));
        total += gw[q] * p * std::cos(omega * gx[q] + phase);
      }
      continue;
    }
    const auto anti = [&](double s, double sigma) {
      const double p = c0 + s * (c1 + s * (c2 + s * c3));
      const double p1 = c1 + s * (2.0 * c2 + 3.0 * c3 * s);
      const double p2 = 2.0 * c2 + 6.0 * c3 * s;
      const double p3 = 6.0 * c3;
      const double arg = omega * sigma + phase;
      const double sn = std::sin(arg), cs = std::cos(arg);
      const double w2 = omega * omega;
      return p * sn / omega + p1 * cs / w2 - p2 * sn / (w2 * omega) - p3 * cs / (w2 * w2);
    };
    total += anti(h, b) - anti(0.0, a);
  }
  return total;
}

std::vector<double> grid_derivatives(const std::vector<double>& x,
                                     const std::vector<double>& f) {
  if (x.size() != f.size() || x.size() < 3) {
    std::ostringstream msg;
    msg << "derivative grid needs at least 3 matching nodes, got " << x.size()
        << " and " << f.size();
    throw std::invalid_argument(msg.str());
  }
  const std::size_t n = x.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i == 0 ? 1 : (i == n - 1 ? n - 2 : i);
    const double h1 = x[c] - x[c - 1];
    const double h2 = x[c + 1] - x[c];
    const double s = x[i] - x[c];
    // Derivative of the parabola through (c-1, c, c+1) evaluated at x_i.
    const double a2 = (f[c + 1] * h1 - f[c] * (h1 + h2) + f[c - 1] * h2)
        / (h1 * h2 * (h1 + h2));
    const double a1 = (f[c + 1] - f[c - 1]) / (h1 + h2)
        + a2 * (h1 - h2);
    d[i] = a1 + 2.0 * a2 * s;
  }
  return d;
}

} // namespace critlab
