#include "critlab/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace critlab {

namespace {

constexpr double kPowerFloor = 0.05;

std::size_t window_start(const std::vector<double>& t, double window_decades) {
  const double cutoff = t.back() / std::pow(10.0, window_decades);
  std::size_t first = 0;
  while (first + 1 < t.size() && t[first] < cutoff) ++first;
  return first;
}

void check_series(const std::vector<double>& t, const std::vector<double>& f) {
  if (t.size() != f.size() || t.size() < 4) {
    std::ostringstream msg;
    msg << "time series needs at least 4 matching samples, got " << t.size()
        << " and " << f.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1]) || !(t[i - 1] > 0.0)) {
      std::ostringstream msg;
      msg << "time grid must be positive and increasing, sample " << i << " ("
          << t[i] << ") after " << t[i - 1];
      throw std::invalid_argument(msg.str());
    }
  }
}

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

Line lsq_line(const std::vector<double>& x, const std::vector<double>& y,
              std::size_t first) {
  const double n = static_cast<double>(x.size() - first);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = first; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  Line l;
  const double det = n * sxx - sx * sx;
  l.slope = (n * sxy - sx * sy) / det;
  l.intercept = (sy - l.slope * sx) / n;
  return l;
}

} // namespace

std::string growth_model_name(GrowthModel m) {
  switch (m) {
    case GrowthModel::Power: return "power";
    case GrowthModel::SqrtLog: return "sqrtlog";
    case GrowthModel::Bounded: return "bounded";
  }
  return "unknown";
}

double GrowthFit::residual(GrowthModel m) const {
  switch (m) {
    case GrowthModel::Power: return residual_power;
    case GrowthModel::SqrtLog: return residual_sqrtlog;
    case GrowthModel::Bounded: return residual_bounded;
  }
  return 0.0;
}

double log_log_slope(const std::vector<double>& t, const std::vector<double>& f,
                     double window_decades, double* residual) {
  check_series(t, f);
  const std::size_t first = window_start(t, window_decades);
  if (t.size() - first < 4) {
    std::ostringstream msg;
    msg << "tail window holds only " << t.size() - first
        << " samples; need at least 4";
    throw std::invalid_argument(msg.str());
  }
  std::vector<double> u(t.size()), y(t.size());
  for (std::size_t i = first; i < t.size(); ++i) {
    if (!(f[i] > 0.0)) {
      std::ostringstream msg;
      msg << "log-log fit needs positive values, sample " << i << " is " << f[i];
      throw std::invalid_argument(msg.str());
    }
    u[i] = std::log(t[i]);
    y[i] = std::log(f[i]);
  }
  const Line l = lsq_line(u, y, first);
  if (residual) {
    double acc = 0.0;
    for (std::size_t i = first; i < t.size(); ++i) {
      const double r = y[i] - (l.intercept + l.slope * u[i]);
      acc += r * r;
    }
    *residual = std::sqrt(acc / (t.size() - first));
  }
  return l.slope;
}

GrowthFit fit_growth(const std::vector<double>& t, const std::vector<double>& norm,
                     double window_decades) {
  check_series(t, norm);
  const std::size_t first = window_start(t, window_decades);
  const std::size_t count = t.size() - first;
  if (count < 4) {
    std::ostringstream msg;
    msg << "growth window holds only " << count << " samples; need at least 4";
    throw std::invalid_argument(msg.str());
  }
  double mean_n = 0.0, mean_n2 = 0.0, sup_n = 0.0;
  for (std::size_t i = first; i < t.size(); ++i) {
    if (!(norm[i] > 0.0)) {
      std::ostringstream msg;
      msg << "growth fit needs positive norms, sample " << i << " is " << norm[i];
      throw std::invalid_argument(msg.str());
    }
    mean_n += norm[i];
    mean_n2 += norm[i] * norm[i];
    sup_n = std::max(sup_n, norm[i]);
  }
  mean_n /= count;
  mean_n2 /= count;

  std::vector<double> u(t.size());
  double mean_u = 0.0;
  for (std::size_t i = first; i < t.size(); ++i) {
    u[i] = std::log(t[i]);
    mean_u += u[i];
  }
  mean_u /= count;
  const double span_u = u[t.size() - 1] - u[first];

  // Power law n ~ c t^e with e kept at or above the growth floor.
  std::vector<double> ln_n(t.size());
  for (std::size_t i = first; i < t.size(); ++i) ln_n[i] = std::log(norm[i]);
  Line pw = lsq_line(u, ln_n, first);
  if (pw.slope < kPowerFloor) {
    pw.slope = kPowerFloor;
    double sy = 0.0;
    for (std::size_t i = first; i < t.size(); ++i) sy += ln_n[i] - pw.slope * u[i];
    pw.intercept = sy / count;
  }

  // n^2 ~ a + b ln t with b kept at or above its growth floor.
  std::vector<double> n2(t.size());
  for (std::size_t i = first; i < t.size(); ++i) n2[i] = norm[i] * norm[i];
  Line sl = lsq_line(u, n2, first);
  const double sl_floor = 0.1 * mean_n2 / span_u;
  if (sl.slope < sl_floor) {
    sl.slope = sl_floor;
    sl.intercept = mean_n2 - sl.slope * mean_u;
  }

  GrowthFit fit;
  double acc_p = 0.0, acc_s = 0.0, acc_b = 0.0;
  for (std::size_t i = first; i < t.size(); ++i) {
    const double model_p = std::exp(pw.intercept + pw.slope * u[i]);
    const double arg_s = sl.intercept + sl.slope * u[i];
    const double model_s = std::sqrt(std::max(arg_s, 1e-300));
    const double rp = norm[i] - model_p;
    const double rs = norm[i] - model_s;
    const double rb = norm[i] - mean_n;
    acc_p += rp * rp;
    acc_s += rs * rs;
    acc_b += rb * rb;
  }
  fit.residual_power = std::sqrt(acc_p / count) / mean_n;
  fit.residual_sqrtlog = std::sqrt(acc_s / count) / mean_n;
  fit.residual_bounded = std::sqrt(acc_b / count) / mean_n;

  fit.model = GrowthModel::Bounded;
  double best = fit.residual_bounded;
  if (fit.residual_sqrtlog < best) {
    fit.model = GrowthModel::SqrtLog;
    best = fit.residual_sqrtlog;
  }
  if (fit.residual_power < best) {
    fit.model = GrowthModel::Power;
    best = fit.residual_power;
  }
  switch (fit.model) {
    case GrowthModel::Power: fit.parameter = pw.slope; break;
    case GrowthModel::SqrtLog: fit.parameter = sl.slope; break;
    case GrowthModel::Bounded: fit.parameter = sup_n; break;
  }
  return fit;
}

} // namespace critlab
