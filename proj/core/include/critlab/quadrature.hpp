#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace critlab {

// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b,
                    std::vector<double>& x, std::vector<double>& w);

// Integral of f over [a, b] by composite Gauss-Legendre with panels of width
// at most max_panel.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double max_panel, int points_per_panel = 16);

// Integral of the piecewise cubic Hermite interpolant of (x_i, f_i, f'_i):
// the trapezoid rule with the (h^2/12)(f'_a - f'_b) endpoint correction on
// every panel.  Nodes must be strictly increasing.
double hermite_integral(const std::vector<double>& x,
                        const std::vector<double>& f,
                        const std::vector<double>& df);

// Integral of f(x) cos(omega x + phase) with f replaced per panel by its
// cubic Hermite interpolant.  The oscillation is integrated exactly by
// repeated integration by parts; panels with |omega| h < 0.2 fall back to
// 5-point Gauss-Legendre to dodge the 1/omega^4 cancellation.
double filon_cos(const std::vector<double>& x,
                 const std::vector<double>& f,
                 const std::vector<double>& df,
                 double omega, double phase = 0.0);

// Three-point finite-difference slopes on a nonuniform grid.
std::vector<double> grid_derivatives(const std::vector<double>& x,
                                     const std::vector<double>& f);

} // namespace critlab
