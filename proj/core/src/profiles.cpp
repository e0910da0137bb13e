#include "critlab/profiles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace critlab {

namespace {

double parse_number(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty()) {
    std::ostringstream msg;
    msg << what << " (\"" << text << "\") is not a number";
    throw std::invalid_argument(msg.str());
  }
  return value;
}

std::string format_spec(const std::string& name, const std::vector<double>& args) {
  std::ostringstream out;
  out << name << "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << ",";
    out << args[i];
  }
  out << ")";
  return out.str();
}

} // namespace

RadialProfile gaussian_profile(double width) {
  if (!(width > 0.0)) {
    std::ostringstream msg;
    msg << "gaussian width (" << width << ") must be positive";
    throw std::invalid_argument(msg.str());
  }
  RadialProfile p;
  p.value = [width](double r) { return std::exp(-0.5 * r * r / (width * width)); };
  // exp(-r^2/2w^2) < 1e-300 past r = w sqrt(600 ln 10).
  p.support_radius = width * std::sqrt(600.0 * std::log(10.0));
  p.compactly_supported = false;
  p.spec = format_spec("gaussian", {width});
  return p;
}

RadialProfile bump_profile(double center, double width) {
  if (!(width > 0.0)) {
    std::ostringstream msg;
    msg << "bump width (" << width << ") must be positive";
    throw std::invalid_argument(msg.str());
  }
  if (!(center >= 0.0)) {
    std::ostringstream msg;
    msg << "bump center (" << center << ") must be nonnegative";
    throw std::invalid_argument(msg.str());
  }
  RadialProfile p;
  p.value = [center, width](double r) {
    const double s = (r - center) / width;
    if (std::fabs(s) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
  };
  p.support_radius = center + width;
  p.compactly_supported = true;
  p.spec = format_spec("bump", {center, width});
  return p;
}

RadialProfile annulus_profile(double r0, double r1) {
  if (!(r0 >= 0.0) || !(r1 > r0)) {
    std::ostringstream msg;
    msg << "annulus radii (" << r0 << ", " << r1 << ") must satisfy 0 <= r0 < r1";
    throw std::invalid_argument(msg.str());
  }
  RadialProfile p = bump_profile(0.5 * (r0 + r1), 0.5 * (r1 - r0));
  p.spec = format_spec("annulus", {r0, r1});
  return p;
}

RadialProfile difference_profile(const RadialProfile& a, const RadialProfile& b,
                                 double beta) {
  RadialProfile p;
  const auto fa = a.value;
  const auto fb = b.value;
  p.value = [fa, fb, beta](double r) { return fa(r) - beta * fb(r); };
  p.support_radius = std::max(a.support_radius, b.support_radius);
  p.compactly_supported = a.compactly_supported && b.compactly_supported;
  std::ostringstream out;
  out << a.spec << "-" << beta << "*" << b.spec;
  p.spec = out.str();
  return p;
}

RadialProfile parse_profile(const std::string& text) {
  const auto bad = [&]() {
    std::ostringstream msg;
    msg << "data (\"" << text
        << "\") must match gaussian(w) | bump(c,w) | annulus(r0,r1)";
    return std::invalid_argument(msg.str());
  };
  const std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw bad();
  const std::string name = text.substr(0, open);
  const std::string body = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(body.substr(start));
      break;
    }
    parts.push_back(body.substr(start, comma - start));
    start = comma + 1;
  }
  if (name == "gaussian" && parts.size() == 1) {
    return gaussian_profile(parse_number(parts[0], "gaussian width"));
  }
  if (name == "bump" && parts.size() == 2) {
    return bump_profile(parse_number(parts[0], "bump center"),
                        parse_number(parts[1], "bump width"));
  }
  if (name == "annulus" && parts.size() == 2) {
    return annulus_profile(parse_number(parts[0], "annulus r0"),
                           parse_number(parts[1], "annulus r1"));
  }
  throw bad();
}

} // namespace critlab
