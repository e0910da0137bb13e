#pragma once

#include <string>

namespace critlab {

enum class OperatorKind { FreeLine1D, FreeRadial, HardyRadial };

// Nonnegative model operator -Delta + lambda/|x|^2 restricted to radial data
// (or the even sector of the line for FreeLine1D, lambda = 0).  Each kind is
// diagonalized by an explicit one-dimensional transform of Bessel order nu;
// the line's cosine kernel corresponds formally to nu = -1/2.
struct ModelOperator {
  OperatorKind kind = OperatorKind::FreeRadial;
  int dimension = 3;
  double lambda = 0.0;
  double nu = 0.5;

  double hardy_constant() const;    // ((N - 2) / 2)^2
  double critical_lambda() const;   // -hardy_constant()
  std::string spec() const;         // normalized textual form
};

enum class CriticalityVerdict { Subcritical, Critical };

// The half-open interval (0, sup_alpha) of orders alpha at which the range
// of S^alpha still meets the positive cone; sup_alpha = (nu + 1) / 2.
struct Classification {
  double sup_alpha = 0.0;
  bool endpoint_included = false;
  CriticalityVerdict verdict = CriticalityVerdict::Critical;
};

ModelOperator make_operator(OperatorKind kind, int dimension, double lambda);

// Grammar: "free1d" | "free:N" | "hardy:N:lambda".
ModelOperator parse_operator(const std::string& text);

Classification classify(const ModelOperator& op);

// Surface measure of the unit sphere in R^N; the line's even sector counts
// both half-lines, so N = 1 yields 2.
double sphere_area(int dimension);

} // namespace critlab
