#include "critlab/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace critlab {

namespace {

constexpr double kMaxReducedOrder = 49.0;

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

int parse_dimension(const std::string& text) {
  const double value = parse_number(text, "dimension");
  const int n = static_cast<int>(std::lround(value));
  if (std::fabs(value - n) > 0.0 || n < 2 || n > 32) {
    std::ostringstream msg;
    msg << "dimension (\"" << text << "\") must be an integer in [2, 32]";
    throw std::invalid_argument(msg.str());
  }
  return n;
}

} // namespace

double ModelOperator::hardy_constant() const {
  const double half = 0.5 * (dimension - 2);
  return half * half;
}

double ModelOperator::critical_lambda() const { return -hardy_constant(); }

std::string ModelOperator::spec() const {
  std::ostringstream out;
  switch (kind) {
    case OperatorKind::FreeLine1D:
      out << "free1d";
      break;
    case OperatorKind::FreeRadial:
      out << "free:" << dimension;
      break;
    case OperatorKind::HardyRadial:
      out << "hardy:" << dimension << ":" << lambda;
      break;
  }
  return out.str();
}

ModelOperator make_operator(OperatorKind kind, int dimension, double lambda) {
  ModelOperator op;
  op.kind = kind;
  op.lambda = lambda;
  switch (kind) {
    case OperatorKind::FreeLine1D:
      if (dimension != 1) {
        std::ostringstream msg;
        msg << "free1d is one-dimensional, got dimension " << dimension;
        throw std::invalid_argument(msg.str());
      }
      if (lambda != 0.0) {
        std::ostringstream msg;
        msg << "free1d has no potential, got lambda " << lambda;
        throw std::invalid_argument(msg.str());
      }
      op.dimension = 1;
      op.nu = -0.5;
      return op;
    case OperatorKind::FreeRadial:
      if (dimension < 2 || dimension > 32) {
        std::ostringstream msg;
        msg << "radial dimension (" << dimension << ") must lie in [2, 32]";
        throw std::invalid_argument(msg.str());
      }
      if (lambda != 0.0) {
        std::ostringstream msg;
        msg << "free radial operator has no potential, got lambda " << lambda;
        throw std::invalid_argument(msg.str());
      }
      op.dimension = dimension;
      op.nu = 0.5 * (dimension - 2);
      return op;
    case OperatorKind::HardyRadial: {
      if (dimension < 2 || dimension > 32) {
        std::ostringstream msg;
        msg << "radial dimension (" << dimension << ") must lie in [2, 32]";
        throw std::invalid_argument(msg.str());
      }
      op.dimension = dimension;
      const double floor = op.critical_lambda();
      if (!(lambda >= floor)) {
        std::ostringstream msg;
        msg << "lambda (" << lambda << ") below the Hardy threshold " << floor
            << " makes the operator unbounded below";
        throw std::invalid_argument(msg.str());
      }
      op.nu = std::sqrt(op.hardy_constant() + lambda);
      if (op.nu > kMaxReducedOrder) {
        std::ostringstream msg;
        msg << "reduced Bessel order " << op.nu << " exceeds the supported limit "
            << kMaxReducedOrder;
        throw std::invalid_argument(msg.str());
      }
      return op;
    }
  }
  throw std::invalid_argument("unknown operator kind");
}

ModelOperator parse_operator(const std::string& text) {
  if (text == "free1d") return make_operator(OperatorKind::FreeLine1D, 1, 0.0);
  const auto bad = [&]() {
    std::ostringstream msg;
    msg << "operator (\"" << text
        << "\") must match free1d | free:N | hardy:N:lambda";
    return std::invalid_argument(msg.str());
  };
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw bad();
  const std::string head = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (head == "free") {
    if (rest.find(':') != std::string::npos) throw bad();
    return make_operator(OperatorKind::FreeRadial, parse_dimension(rest), 0.0);
  }
  if (head == "hardy") {
    const std::size_t colon2 = rest.find(':');
    if (colon2 == std::string::npos) throw bad();
    const int n = parse_dimension(rest.substr(0, colon2));
    const double lambda = parse_number(rest.substr(colon2 + 1), "lambda");
    return make_operator(OperatorKind::HardyRadial, n, lambda);
  }
  throw bad();
}

Classification classify(const ModelOperator& op) {
  Classification c;
  c.sup_alpha = 0.5 * (op.nu + 1.0);
  c.endpoint_included = false;
  c.verdict = c.sup_alpha > 0.5 ? CriticalityVerdict::Subcritical
                                : CriticalityVerdict::Critical;
  return c;
}

double sphere_area(int dimension) {
  if (dimension < 1 || dimension > 32) {
    std::ostringstream msg;
    msg << "dimension (" << dimension << ") must lie in [1, 32]";
    throw std::invalid_argument(msg.str());
  }
  if (dimension == 1) return 2.0;
  return 2.0 * std::pow(M_PI, 0.5 * dimension) / std::tgamma(0.5 * dimension);
}

} // namespace critlab
