#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "critlab/operators.hpp"
#include "critlab/profiles.hpp"

namespace critlab {

enum class TransformKind { Hankel, Cosine };

// Raised when a grid cannot resolve a requested computation; the message
// names the parameter change that would fix it.
class resolution_error : public std::runtime_error {
 public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// Discrete diagonalizing transform for one model operator on [0, R].
//
// Radial kinds use the quasi-discrete Hankel transform of order nu: with
// j_1 < ... < j_{M+1} the positive zeros of J_nu and S = j_{M+1}, the nodes
// are r_i = j_i R / S, k_i = j_i / R, and both directions share the kernel
// J_nu(j_i j_j / S).  The line's even sector uses midpoint grids and the
// orthogonal cosine kernel (a DCT-IV), with the unitary even-transform
// normalization sqrt(2/pi) Int g(r) cos(kr) dr.
//
// Samples live in reduced form h(r) = r^((N-2)/2) g(r); the transforms and
// quadrature weights act on h.
class SpectralTransform {
 public:
  SpectralTransform(const ModelOperator& op, int size, double radius);

  const ModelOperator& op() const { return op_; }
  TransformKind kind() const { return kind_; }
  int size() const { return size_; }
  double radius() const { return radius_; }
  double band_limit() const { return band_limit_; }
  double order() const { return op_.nu; }

  const std::vector<double>& r() const { return r_; }
  const std::vector<double>& k() const { return k_; }

  // Weights of the discrete quadratures Int_0^R phi(r) r dr ~ sum w_i r_i phi_i
  // and Int_0^K psi(k) k dk ~ sum v_i k_i psi_i (for the line, Int phi dr ~
  // sum w_i phi_i and likewise v on the spectral side).
  const std::vector<double>& w() const { return w_; }
  const std::vector<double>& v() const { return v_; }

  // Full L^2(R^N) measure carried by node i: omega w_i r_i (radial) or
  // 2 w_i (line), and the spectral-side counterpart.
  double physical_measure(int i) const;
  double spectral_measure(int i) const;
  double omega() const { return omega_; }

  std::vector<double> forward(const std::vector<double>& h) const;
  std::vector<double> inverse(const std::vector<double>& ghat) const;

  // The forward functional evaluated at an arbitrary k in [0, K]: the
  // continuum extension of the discrete spectrum below the first node.
  double ghat_at(const std::vector<double>& h, double k) const;

  // Reduction weight r^((N-2)/2).
  double reduce_weight(double r) const;

 private:
  ModelOperator op_;
  TransformKind kind_;
  int size_ = 0;
  double radius_ = 0.0;
  double band_limit_ = 0.0;
  double omega_ = 0.0;
  std::vector<double> r_, k_, w_, v_;
  std::vector<double> forward_scale_, inverse_scale_;  // diagonal factors
  std::vector<double> kernel_;                         // size x size, symmetric
};

// Reduced samples of one function on a transform's physical grid.
struct SampledFunction {
  std::shared_ptr<const SpectralTransform> transform;
  std::vector<double> h;                  // h(r_i) = r_i^((N-2)/2) g(r_i)
  std::optional<RadialProfile> profile;   // present when built from a profile
  bool tail_resolved = true;              // profile negligible at r = R

  static SampledFunction from_profile(std::shared_ptr<const SpectralTransform> t,
                                      const RadialProfile& profile);

  double value(int i) const;              // physical g(r_i)
  double norm() const;                    // L^2(R^N) norm via grid quadrature
};

// Spectral-side coefficients on the same transform's k grid.
struct SpectralFunction {
  std::shared_ptr<const SpectralTransform> transform;
  std::vector<double> ghat;

  double norm() const;
};

SpectralFunction forward(const SampledFunction& f);
SampledFunction inverse(const SpectralFunction& f);

// g |-> m(k) g on the spectral side.
SpectralFunction apply_multiplier(const SpectralFunction& f,
                                  const std::function<double(double)>& m);

// a x + b y on a shared grid.
SampledFunction linear_combination(double a, const SampledFunction& x,
                                   double b, const SampledFunction& y);

} // namespace critlab
