#pragma once

#include <functional>
#include <string>

namespace critlab {

// Radial data profile g(r), r >= 0 (even profile g(|x|) on the line).
struct RadialProfile {
  std::function<double(double)> value;
  double support_radius = 0.0;   // |g| is negligible (or zero) beyond this
  bool compactly_supported = false;
  std::string spec;              // normalized textual form
};

// gaussian(width): exp(-r^2 / (2 width^2)).
RadialProfile gaussian_profile(double width);

// bump(center, width): exp(1 - 1/(1 - s^2)) with s = (r - center)/width,
// zero outside |s| < 1.
RadialProfile bump_profile(double center, double width);

// annulus(r0, r1): the bump supported exactly on (r0, r1).
RadialProfile annulus_profile(double r0, double r1);

// a - beta * b.
RadialProfile difference_profile(const RadialProfile& a, const RadialProfile& b,
                                 double beta);

// Grammar: gaussian(w) | bump(c,w) | annulus(r0,r1).
RadialProfile parse_profile(const std::string& text);

} // namespace critlab
