#include "critlab/transform.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "critlab/bessel.hpp"

namespace critlab {

namespace {

constexpr int kMinSize = 8;
constexpr int kMaxSize = 4096;

void check_geometry(int size, double radius) {
  if (size < kMinSize || size > kMaxSize) {
    std::ostringstream msg;
    msg << "grid size M (" << size << ") must lie in [" << kMinSize << ", "
        << kMaxSize << "]";
    throw std::invalid_argument(msg.str());
  }
  if (!(radius > 0.0) || !(radius < 1e6)) {
    std::ostringstream msg;
    msg << "grid radius R (" << radius << ") must lie in (0, 1e6)";
    throw std::invalid_argument(msg.str());
  }
}

} // namespace

SpectralTransform::SpectralTransform(const ModelOperator& op, int size,
                                     double radius)
    : op_(op), size_(size), radius_(radius) {
  check_geometry(size, radius);
  omega_ = sphere_area(op.dimension);
  r_.resize(size);
  k_.resize(size);
  w_.resize(size);
  v_.resize(size);
  forward_scale_.resize(size);
  inverse_scale_.resize(size);
  kernel_.resize(static_cast<std::size_t>(size) * size);

  if (op.kind == OperatorKind::FreeLine1D) {
    kind_ = TransformKind::Cosine;
    band_limit_ = M_PI * size / radius;
    const double dr = radius / size;
    const double dk = M_PI / radius;
    const double unit = std::sqrt(2.0 / M_PI);
    for (int i = 0; i < size; ++i) {
      r_[i] = (i + 0.5) * dr;
      k_[i] = (i + 0.5) * dk;
      w_[i] = dr;
      v_[i] = dk;
      forward_scale_[i] = unit * dr;
      inverse_scale_[i] = unit * dk;
    }
    for (int i = 0; i < size; ++i) {
      for (int j = i; j < size; ++j) {
        const double c = std::cos(M_PI * (i + 0.5) * (j + 0.5) / size);
        kernel_[static_cast<std::size_t>(i) * size + j] = c;
        kernel_[static_cast<std::size_t>(j) * size + i] = c;
      }
    }
    return;
  }

  kind_ = TransformKind::Hankel;
  const double nu = op.nu;
  const std::vector<double> zeros = bessel_zeros(nu, size + 1);
  const double big = zeros[size];
  band_limit_ = big / radius;
  for (int i = 0; i < size; ++i) {
    r_[i] = zeros[i] * radius / big;
    k_[i] = zeros[i] / radius;
    const double jp = bessel_j(nu + 1.0, zeros[i]);
    const double forward_w = 2.0 / (band_limit_ * band_limit_ * jp * jp);
    const double inverse_w = 2.0 / (radius * radius * jp * jp);
    w_[i] = forward_w / r_[i];
    v_[i] = inverse_w / k_[i];
    forward_scale_[i] = forward_w;
    inverse_scale_[i] = inverse_w;
  }
  for (int i = 0; i < size; ++i) {
    for (int j = i; j < size; ++j) {
      const double b = bessel_j(nu, zeros[i] * zeros[j] / big);
      kernel_[static_cast<std::size_t>(i) * size + j] = b;
      kernel_[static_cast<std::size_t>(j) * size + i] = b;
    }
  }
}

double SpectralTransform::physical_measure(int i) const {
  return kind_ == TransformKind::Hankel ? omega_ * w_[i] * r_[i] : omega_ * w_[i];
}

double SpectralTransform::spectral_measure(int i) const {
  return kind_ == TransformKind::Hankel ? omega_ * v_[i] * k_[i] : omega_ * v_[i];
}

std::vector<double> SpectralTransform::forward(const std::vector<double>& h) const {
  if (static_cast<int>(h.size()) != size_) {
    std::ostringstream msg;
    msg << "sample vector size (" << h.size() << ") does not match grid size "
        << size_;
    throw std::invalid_argument(msg.str());
  }
  std::vector<double> scaled(size_);
  for (int j = 0; j < size_; ++j) scaled[j] = forward_scale_[j] * h[j];
  std::vector<double> out(size_, 0.0);
  for (int i = 0; i < size_; ++i) {
    const double* row = kernel_.data() + static_cast<std::size_t>(i) * size_;
    double acc = 0.0;
    for (int j = 0; j < size_; ++j) acc += row[j] * scaled[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> SpectralTransform::inverse(const std::vector<double>& ghat) const {
  if (static_cast<int>(ghat.size()) != size_) {
    std::ostringstream msg;
    msg << "spectral vector size (" << ghat.size()
        << ") does not match grid size " << size_;
    throw std::invalid_argument(msg.str());
  }
  std::vector<double> scaled(size_);
  for (int j = 0; j < size_; ++j) scaled[j] = inverse_scale_[j] * ghat[j];
  std::vector<double> out(size_, 0.0);
  for (int i = 0; i < size_; ++i) {
    const double* row = kernel_.data() + static_cast<std::size_t>(i) * size_;
    double acc = 0.0;
    for (int j = 0; j < size_; ++j) acc += row[j] * scaled[j];
    out[i] = acc;
  }
  return out;
}

double SpectralTransform::ghat_at(const std::vector<double>& h, double k) const {
  if (static_cast<int>(h.size()) != size_) {
    std::ostringstream msg;
    msg << "sample vector size (" << h.size() << ") does not match grid size "
        << size_;
    throw std::invalid_argument(msg.str());
  }
  if (!(k >= 0.0) || !(k <= band_limit_)) {
    std::ostringstream msg;
    msg << "k (" << k << ") must lie in [0, " << band_limit_ << "]";
    throw std::invalid_argument(msg.str());
  }
  double acc = 0.0;
  if (kind_ == TransformKind::Hankel) {
    const double nu = op_.nu;
    for (int j = 0; j < size_; ++j) {
      acc += forward_scale_[j] * h[j] * bessel_j(nu, k * r_[j]);
    }
  } else {
    for (int j = 0; j < size_; ++j) {
      acc += forward_scale_[j] * h[j] * std::cos(k * r_[j]);
    }
  }
  return acc;
}

double SpectralTransform::reduce_weight(double r) const {
  if (kind_ == TransformKind::Cosine) return 1.0;
  const double power = 0.5 * (op_.dimension - 2);
  if (power == 0.0) return 1.0;
  return std::pow(r, power);
}

SampledFunction SampledFunction::from_profile(
    std::shared_ptr<const SpectralTransform> t, const RadialProfile& profile) {
  if (!t) throw std::invalid_argument("from_profile needs a transform");
  SampledFunction f;
  f.transform = t;
  f.h.resize(t->size());
  double peak = 0.0;
  for (int i = 0; i < t->size(); ++i) {
    const double r = t->r()[i];
    f.h[i] = t->reduce_weight(r) * profile.value(r);
    peak = std::max(peak, std::fabs(profile.value(r)));
  }
  f.profile = profile;
  const double edge = std::fabs(profile.value(t->radius()));
  f.tail_resolved = edge <= 1e-12 * std::max(peak, 1e-300);
  if (!f.tail_resolved) {
    std::cerr << "warning: data " << profile.spec << " is not negligible at R = "
              << t->radius() << " (|g(R)| = " << edge
              << "); increase --grid-r\n";
  }
  return f;
}

double SampledFunction::value(int i) const {
  const double wgt = transform->reduce_weight(transform->r()[i]);
  return h[i] / wgt;
}

double SampledFunction::norm() const {
  double acc = 0.0;
  for (int i = 0; i < transform->size(); ++i) {
    acc += transform->physical_measure(i) * h[i] * h[i];
  }
  return std::sqrt(acc);
}

double SpectralFunction::norm() const {
  double acc = 0.0;
  for (int i = 0; i < transform->size(); ++i) {
    acc += transform->spectral_measure(i) * ghat[i] * ghat[i];
  }
  return std::sqrt(acc);
}

SpectralFunction forward(const SampledFunction& f) {
  SpectralFunction out;
  out.transform = f.transform;
  out.ghat = f.transform->forward(f.h);
  return out;
}

SampledFunction inverse(const SpectralFunction& f) {
  SampledFunction out;
  out.transform = f.transform;
  out.h = f.transform->inverse(f.ghat);
  return out;
}

SpectralFunction apply_multiplier(const SpectralFunction& f,
                                  const std::function<double(double)>& m) {
  SpectralFunction out;
  out.transform = f.transform;
  out.ghat.resize(f.ghat.size());
  for (std::size_t i = 0; i < f.ghat.size(); ++i) {
    out.ghat[i] = m(f.transform->k()[i]) * f.ghat[i];
  }
  return out;
}

SampledFunction linear_combination(double a, const SampledFunction& x,
                                   double b, const SampledFunction& y) {
  if (x.transform != y.transform) {
    throw std::invalid_argument(
        "linear_combination needs both functions on the same grid");
  }
  SampledFunction out;
  out.transform = x.transform;
  out.h.resize(x.h.size());
  for (std::size_t i = 0; i < x.h.size(); ++i) out.h[i] = a * x.h[i] + b * y.h[i];
  if (x.profile && y.profile && a == 1.0) {
    out.profile = difference_profile(*x.profile, *y.profile, -b);
  }
  return out;
}

} // namespace critlab
