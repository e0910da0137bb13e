#include "critlab/wave.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "critlab/bessel.hpp"
#include "critlab/quadrature.hpp"

namespace critlab {

double WaveState::norm() const {
  double acc = 0.0;
  for (int i = 0; i < transform->size(); ++i) {
    acc += transform->spectral_measure(i) * what[i] * what[i];
  }
  return std::sqrt(acc);
}

double WaveState::energy() const {
  double acc = 0.0;
  for (int i = 0; i < transform->size(); ++i) {
    const double k = transform->k()[i];
    acc += transform->spectral_measure(i)
        * (vhat[i] * vhat[i] + k * k * what[i] * what[i]);
  }
  return acc;
}

WaveState wave_evolve(const SampledFunction& g, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "time t (" << t << ") must be nonnegative and finite";
    throw std::invalid_argument(msg.str());
  }
  const SpectralTransform& T = *g.transform;
  const double k1 = T.k()[0];
  const double limit = M_PI * T.size() / 4.0;
  if (k1 * t > limit) {
    const int needed = static_cast<int>(std::ceil(4.0 * k1 * t / M_PI));
    std::ostringstream msg;
    msg << "wave state at t = " << t << " violates the phase-resolution guard "
        << "k_1 t <= pi M / 4 (k_1 t = " << k1 * t << ", pi M / 4 = " << limit
        << "); increase the grid size to M >= " << needed;
    throw resolution_error(msg.str());
  }
  WaveState s;
  s.transform = g.transform;
  s.t = t;
  const SpectralFunction gh = forward(g);
  s.what.resize(gh.ghat.size());
  s.vhat.resize(gh.ghat.size());
  for (std::size_t i = 0; i < gh.ghat.size(); ++i) {
    const double k = T.k()[i];
    s.what[i] = wave_multiplier(t, k) * gh.ghat[i];
    s.vhat[i] = std::cos(t * k) * gh.ghat[i];
  }
  return s;
}

DecayCurve wave_decay_curve(const SampledFunction& g,
                            const std::vector<double>& t_grid,
                            double window_decades) {
  if (t_grid.size() < 4) {
    std::ostringstream msg;
    msg << "wave decay curve needs at least 4 times, got " << t_grid.size();
    throw std::invalid_argument(msg.str());
  }
  const SpectralDensity density(g, t_grid.back());
  DecayCurve curve;
  curve.t = t_grid;
  curve.value.resize(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    curve.value[i] = std::sqrt(density.wave_norm_sq(t_grid[i]));
  }
  curve.fit = fit_growth(curve.t, curve.value, window_decades);
  return curve;
}

DispersiveBound wave_bound_check(const SampledFunction& g, double alpha,
                                 const std::vector<double>& t_grid,
                                 const SpectralDensity* density) {
  if (!(alpha > 0.0) || !(alpha <= 0.5)) {
    std::ostringstream msg;
    msg << "alpha (" << alpha << ") must lie in (0, 1/2]";
    throw std::invalid_argument(msg.str());
  }
  if (t_grid.empty()) {
    throw std::invalid_argument("wave_bound_check needs a nonempty time grid");
  }
  std::optional<SpectralDensity> own;
  if (!density) {
    own.emplace(g, t_grid.back());
    density = &*own;
  }
  const SeminormResult sem = seminorm_freq(g, alpha, density);
  if (sem.verdict != SeminormVerdict::Finite) {
    std::ostringstream msg;
    msg << "seminorm at alpha = " << alpha << " is " << verdict_name(sem.verdict)
        << "; the dispersive bound does not apply";
    throw std::invalid_argument(msg.str());
  }
  DispersiveBound b;
  b.alpha = alpha;
  b.constant = std::pow(2.0, 0.5 + alpha * (1.0 - 2.0 * alpha));
  b.seminorm = sem.value;
  for (const double t : t_grid) {
    const double weighted =
        std::pow(t, 2.0 * alpha - 1.0) * std::sqrt(density->wave_norm_sq(t));
    if (weighted > b.sup_weighted) {
      b.sup_weighted = weighted;
      b.worst_t = t;
    }
  }
  b.holds = b.sup_weighted <= b.constant * b.seminorm + 1e-8;
  return b;
}

double transmutation_error(const SampledFunction& g, double t,
                           double sigma_max, int points_per_decade) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "time t (" << t << ") must be positive and finite";
    throw std::invalid_argument(msg.str());
  }
  const double root_t = std::sqrt(t);
  if (sigma_max == 0.0) sigma_max = 10.0 * root_t;
  if (!(sigma_max >= 10.0 * root_t)) {
    std::ostringstream msg;
    msg << "sigma_max (" << sigma_max << ") must cover 10 sqrt(t) = "
        << 10.0 * root_t;
    throw std::invalid_argument(msg.str());
  }
  if (points_per_decade < 8 || points_per_decade > 1024) {
    std::ostringstream msg;
    msg << "points per decade (" << points_per_decade
        << ") must lie in [8, 1024]";
    throw std::invalid_argument(msg.str());
  }

  // sigma grid: log-spaced over four decades below sqrt(t), matching linear
  // spacing above.
  const double sigma_lo = 1e-4 * root_t;
  std::vector<double> sigma;
  const double ratio = std::pow(10.0, 1.0 / points_per_decade);
  for (double s = sigma_lo; s < root_t * (1.0 - 1e-12); s *= ratio) {
    sigma.push_back(s);
  }
  const double step = root_t * (ratio - 1.0);
  for (double s = root_t; s < sigma_max; s += step) sigma.push_back(s);
  sigma.push_back(sigma_max);

  std::vector<double> env(sigma.size()), denv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const double s = sigma[i];
    const double damp = std::exp(-0.25 * s * s / t);
    env[i] = s * damp;
    denv[i] = damp * (1.0 - 0.5 * s * s / t);
  }

  const SpectralTransform& T = *g.transform;
  const SpectralFunction gh = forward(g);
  const double coef = 0.5 / std::sqrt(M_PI * t * t * t);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < T.size(); ++i) {
    const double k = T.k()[i];
    const double arg = t * k * k;
    const double lhs = arg > 700.0 ? 0.0 : std::exp(-arg);
    // Int env(sigma) sin(k sigma) dsigma, plus the analytic sliver below
    // sigma_lo where the integrand is k sigma^2 to leading order.
    const double body = filon_cos(sigma, env, denv, k, -0.5 * M_PI);
    const double sliver = k * sigma_lo * sigma_lo * sigma_lo / 3.0;
    const double rhs = coef * (body + sliver) / k;
    const double weight = T.spectral_measure(i) * gh.ghat[i] * gh.ghat[i];
    num += weight * (lhs - rhs) * (lhs - rhs);
    den += weight * lhs * lhs;
  }
  if (den <= 0.0) {
    throw std::invalid_argument(
        "transmutation check needs data with a nonzero heat image");
  }
  return std::sqrt(num / den);
}

InterpolationResult interpolation_check(const SpectralFunction& x, double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 0.5)) {
    std::ostringstream msg;
    msg << "alpha (" << alpha << ") must lie in (0, 1/2]";
    throw std::invalid_argument(msg.str());
  }
  const SpectralTransform& T = *x.transform;
  double n2 = 0.0, a0 = 0.0, b0 = 0.0;
  for (int i = 0; i < T.size(); ++i) {
    const double mu = T.spectral_measure(i);
    const double k = T.k()[i];
    const double f = x.ghat[i] * x.ghat[i];
    n2 += mu * f;
    a0 += mu * std::pow(k, 2.0 - 4.0 * alpha) * f;
    b0 += mu * std::pow(k, -4.0 * alpha) * f;
  }
  const double scale = std::tgamma(2.0 * alpha) * std::pow(2.0, -2.0 * alpha);
  InterpolationResult r;
  r.lhs = std::sqrt(n2);
  r.seminorm_half = std::sqrt(scale * a0);
  r.seminorm_x = std::sqrt(scale * b0);
  r.rhs = std::pow(2.0, 0.5 + alpha * (1.0 - 2.0 * alpha))
      * std::pow(r.seminorm_half, 2.0 * alpha)
      * std::pow(r.seminorm_x, 1.0 - 2.0 * alpha);
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  return r;
}

SampledFunction reduce_to_2d(const SampledFunction& g) {
  const ModelOperator& op = g.transform->op();
  if (op.kind != OperatorKind::HardyRadial) {
    throw std::invalid_argument(
        "reduce_to_2d needs a critical inverse-square operator");
  }
  const double target = op.critical_lambda();
  if (std::fabs(op.lambda - target) > 1e-12 * std::max(1.0, std::fabs(target))) {
    std::ostringstream msg;
    msg << "reduce_to_2d needs lambda at the critical value " << target
        << ", got " << op.lambda;
    throw std::invalid_argument(msg.str());
  }
  if (op.dimension < 3) {
    std::ostringstream msg;
    msg << "reduce_to_2d needs dimension >= 3, got " << op.dimension;
    throw std::invalid_argument(msg.str());
  }
  const ModelOperator plane = make_operator(OperatorKind::FreeRadial, 2, 0.0);
  auto T2 = std::make_shared<SpectralTransform>(plane, g.transform->size(),
                                                g.transform->radius());
  SampledFunction out;
  out.transform = T2;
  out.h = g.h;
  if (g.profile) {
    const double power = 0.5 * (op.dimension - 2);
    const RadialProfile& src = *g.profile;
    RadialProfile reduced;
    const auto base = src.value;
    reduced.value = [base, power](double r) {
      return std::pow(r, power) * base(r);
    };
    reduced.support_radius = src.support_radius;
    reduced.compactly_supported = src.compactly_supported;
    reduced.spec = "reduced(" + src.spec + ")";
    out.profile = reduced;
  }
  out.tail_resolved = g.tail_resolved;
  return out;
}

} // namespace critlab
