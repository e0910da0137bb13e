#include "critlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "critlab/quadrature.hpp"

namespace critlab {

namespace {

constexpr int kNodesPerDecade = 32;
constexpr double kChunkTimeFactor = 0.25;  // k_lo t_max <= this

} // namespace

SpectralDensity::SpectralDensity(const SampledFunction& g, double t_max) {
  if (!g.transform) throw std::invalid_argument("density needs sampled data");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    std::ostringstream msg;
    msg << "t_max (" << t_max << ") must be positive and finite";
    throw std::invalid_argument(msg.str());
  }
  const SpectralTransform& T = *g.transform;
  t_max_ = t_max;
  cmu_ = T.kind() == TransformKind::Hankel ? T.omega() : 2.0;
  d_ = T.kind() == TransformKind::Hankel ? 1 : 0;

  const double k1 = T.k()[0];
  const double big = T.band_limit();
  k_lo_ = std::min(0.25 * k1, kChunkTimeFactor / t_max);

  // Node set: log-spaced nodes from k_lo to the band limit merged with the
  // grid's own frequencies, so panels stay short both in k (the grid pitch
  // bounds them above) and in log k (the log pitch bounds them below, where
  // the grid is log-sparse and long-time weights concentrate).
  const int n_log = std::max(
      8, static_cast<int>(std::ceil(std::log10(big / k_lo_) * kNodesPerDecade)));
  const double ratio = std::pow(big / k_lo_, 1.0 / n_log);
  std::vector<double> merged;
  merged.reserve(n_log + T.size());
  for (int i = 0; i < n_log; ++i) merged.push_back(k_lo_ * std::pow(ratio, i));
  merged.insert(merged.end(), T.k().begin(), T.k().end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end(),
                           [](double a, double b) { return b - a < 1e-9 * b; }),
               merged.end());

  const std::vector<double> ghat_grid = T.forward(g.h);
  k_ = std::move(merged);
  f_.resize(k_.size());
  std::size_t grid_at = 0;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    while (grid_at < ghat_grid.size() && T.k()[grid_at] < k_[i] * (1.0 - 1e-9)) {
      ++grid_at;
    }
    double ghat = 0.0;
    if (grid_at < ghat_grid.size()
        && std::fabs(T.k()[grid_at] - k_[i]) <= 1e-9 * k_[i]) {
      ghat = ghat_grid[grid_at];
    } else {
      ghat = T.ghat_at(g.h, k_[i]);
    }
    f_[i] = ghat * ghat;
  }
  u_.resize(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) u_[i] = std::log(k_[i]);
  df_ = grid_derivatives(k_, f_);

  // |ghat| ~ sqrt(c) k^p on the three deepest nodes.
  fit_ok_ = true;
  double su = 0.0, sy = 0.0, suu = 0.0, suy = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double a = std::sqrt(f_[i]);
    if (a < 1e-300) {
      fit_ok_ = false;
      break;
    }
    const double y = std::log(a);
    su += u_[i];
    sy += y;
    suu += u_[i] * u_[i];
    suy += u_[i] * y;
  }
  if (fit_ok_) {
    const double det = 3.0 * suu - su * su;
    p_ = (3.0 * suy - su * sy) / det;
    const double lc = (sy - p_ * su) / 3.0;
    // Reject fits the three nodes themselves contradict (sign changes or
    // rounding plateaus make the local slope meaningless).
    for (int i = 0; i < 3 && fit_ok_; ++i) {
      const double resid = 0.5 * std::log(f_[i]) - (lc + p_ * u_[i]);
      if (std::fabs(resid) > 0.1) fit_ok_ = false;
    }
    const double lc2 = 2.0 * lc;
    c_ = lc2 < -690.0 ? 0.0 : std::exp(lc2);
  }
  if (!fit_ok_) {
    c_ = 0.0;
    p_ = 0.0;
  }
}

void SpectralDensity::check_time(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "time t (" << t << ") must be nonnegative and finite";
    throw std::invalid_argument(msg.str());
  }
  if (t > t_max_ * (1.0 + 1e-9)) {
    std::ostringstream msg;
    msg << "time t (" << t << ") exceeds the resolved horizon t_max (" << t_max_
        << "); rebuild the density with t_max >= " << t;
    throw resolution_error(msg.str());
  }
}

double SpectralDensity::chunk_power_integral(double exponent) const {
  if (c_ == 0.0) return 0.0;
  const double e = 2.0 * p_ + exponent;
  if (e <= -1.0) return std::numeric_limits<double>::infinity();
  return cmu_ * c_ * std::pow(k_lo_, e + 1.0) / (e + 1.0);
}

double SpectralDensity::heat_norm_sq(double t) const {
  check_time(t);
  // exp(-2 t k^2) is within 2 t k_lo^2 <= 1.3e-7 of 1 across the chunk.
  double total = chunk_power_integral(static_cast<double>(d_));
  const std::size_t n = k_.size();
  std::vector<double> psi(n), dpsi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_[i];
    const double arg = 2.0 * t * k * k;
    if (arg > 700.0) {
      psi[i] = 0.0;
      dpsi[i] = 0.0;
      continue;
    }
    const double damp = std::exp(-arg);
    const double kd = d_ == 1 ? k : 1.0;
    const double phi = cmu_ * f_[i] * kd * damp;
    const double dphi = cmu_ * damp
        * (df_[i] * kd + f_[i] * (d_ == 1 ? 1.0 : 0.0) - 4.0 * t * k * f_[i] * kd);
    psi[i] = phi * k;
    dpsi[i] = psi[i] + k * k * dphi;
  }
  total += hermite_integral(u_, psi, dpsi);
  return std::max(total, 0.0);
}

double SpectralDensity::wave_norm_sq(double t) const {
  check_time(t);
  if (t == 0.0) return 0.0;
  // Below k_lo, sin^2(tk) = (tk)^2 - (tk)^4/3 + O((tk)^6); t k_lo <= 0.25 by
  // construction, so the quartic term closes the chunk to ~1e-4 of itself.
  double total = t * t * chunk_power_integral(static_cast<double>(d_))
      - (t * t * t * t / 3.0) * chunk_power_integral(d_ + 2.0);
  // Panel-adaptive quadrature.  Splitting sin^2(tk)/k^2 globally into a
  // smooth and an oscillatory piece is ill-conditioned near k -> 0 (each
  // piece carries ~1/k_lo of mass that must cancel), so slow-phase panels
  // integrate sin^2 directly against a cubic model of f in log k, and only
  // fast-phase panels -- whose own mass is bounded by the answer -- use the
  // Filon form, with the same cubic feeding both the plain and the cosine
  // parts so the model error enters multiplied by (1 - cos).
  const std::size_t n = k_.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double ka = k_[i], kb = k_[i + 1];
    const double fa = f_[i], fb = f_[i + 1];
    if (fa == 0.0 && fb == 0.0) continue;
    const double phase = 2.0 * t * (kb - ka);
    if (phase <= 50.0) {
      const double ua = u_[i], ub = u_[i + 1];
      const double h = ub - ua;
      const double ga = ka * df_[i], gb = kb * df_[i + 1];  // df/du
      const int n_gl = std::min(32, 6 + static_cast<int>(phase / 1.5));
      std::vector<double> xs, ws;
      gauss_legendre(n_gl, 0.0, 1.0, xs, ws);
      double acc = 0.0;
      for (int q = 0; q < n_gl; ++q) {
        const double s = xs[q];
        const double s2 = s * s, s3 = s2 * s;
        const double fm = fa * (2.0 * s3 - 3.0 * s2 + 1.0)
            + h * ga * (s3 - 2.0 * s2 + s) + fb * (3.0 * s2 - 2.0 * s3)
            + h * gb * (s3 - s2);
        const double k = std::exp(ua + s * h);
        const double sinc = std::sin(t * k) / k;
        acc += ws[q] * fm * sinc * sinc * (d_ == 1 ? k : 1.0) * k;
      }
      total += cmu_ * h * acc;
    } else {
      const double kd2a = d_ == 1 ? 1.0 / ka : 1.0 / (ka * ka);
      const double kd2b = d_ == 1 ? 1.0 / kb : 1.0 / (kb * kb);
      const double pa = 0.5 * cmu_ * fa * kd2a;
      const double pb = 0.5 * cmu_ * fb * kd2b;
      const double dpa = 0.5 * cmu_ * (df_[i] * kd2a + fa * (d_ - 2.0) * kd2a / ka);
      const double dpb = 0.5 * cmu_ * (df_[i + 1] * kd2b + fb * (d_ - 2.0) * kd2b / kb);
      const double h = kb - ka;
      const double plain = 0.5 * h * (pa + pb) + h * h / 12.0 * (dpa - dpb);
      const std::vector<double> xk{ka, kb}, pf{pa, pb}, pdf{dpa, dpb};
      total += plain - filon_cos(xk, pf, pdf, 2.0 * t, 0.0);
    }
  }
  return std::max(total, 0.0);
}

double SpectralDensity::alpha_weighted_sq(double alpha) const {
  if (!(alpha > 0.0)) {
    std::ostringstream msg;
    msg << "alpha (" << alpha << ") must be positive";
    throw std::invalid_argument(msg.str());
  }
  double total = chunk_power_integral(d_ - 4.0 * alpha);
  if (std::isinf(total)) return total;
  const double e = d_ - 4.0 * alpha + 1.0;
  const std::size_t n = k_.size();
  std::vector<double> psi(n), dpsi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_[i];
    const double ke = std::pow(k, e);
    psi[i] = cmu_ * f_[i] * ke;
    dpsi[i] = cmu_ * (df_[i] * k + e * f_[i]) * ke;
  }
  total += hermite_integral(u_, psi, dpsi);
  return std::max(total, 0.0);
}

double SpectralDensity::norm_sq() const {
  double total = chunk_power_integral(static_cast<double>(d_));
  const std::size_t n = k_.size();
  std::vector<double> psi(n), dpsi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_[i];
    const double kd = d_ == 1 ? k : 1.0;
    psi[i] = cmu_ * f_[i] * kd * k;
    dpsi[i] = psi[i] + k * k * cmu_ * (df_[i] * kd + (d_ == 1 ? f_[i] : 0.0));
  }
  total += hermite_integral(u_, psi, dpsi);
  return std::max(total, 0.0);
}

double SpectralDensity::energy_form() const {
  double total = chunk_power_integral(d_ + 2.0);
  const std::size_t n = k_.size();
  std::vector<double> psi(n), dpsi(n);
  const double e = d_ + 3.0;  // k^(d+2) dk in log variable adds one power
  for (std::size_t i = 0; i < n; ++i) {
    const double k = k_[i];
    const double ke = std::pow(k, e);
    psi[i] = cmu_ * f_[i] * ke;
    dpsi[i] = cmu_ * (df_[i] * k + e * f_[i]) * ke;
  }
  total += hermite_integral(u_, psi, dpsi);
  return std::max(total, 0.0);
}

} // namespace critlab
