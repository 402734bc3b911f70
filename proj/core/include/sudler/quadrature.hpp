#pragma once

#include <utility>

namespace sudler {

/// int_0^y log|2 sin(pi x)| dx for 0 <= y <= 1.
double log_sin_antiderivative(double y);

/// int_{y0}^{y1} log|2 sin(pi x)| dx, 0 <= y0, y1 <= 1.
double log_sin_integral(double y0, double y1);

/// Hyperbolic volume of the figure-eight knot complement,
/// 4 pi int_0^{5/6} log(2 sin(pi x)) dx.
double vol41();

/// int_1^inf B_2({x}) / (x - 5/6)^2 dx and int_1^inf B_2({x}) / x^2 dx,
/// evaluated numerically.
std::pair<double, double> bernoulli_b2_integrals();

/// The same two integrals from their Gamma-function closed forms.
std::pair<double, double> bernoulli_b2_closed_forms();

/// min over the grid y = 0, h, 2h, ... < 5/6 of
/// (5/6 - y)^-2 int_y^{5/6} log|2 sin(pi x)| dx, with the minimizing y.
std::pair<double, double> concavity_minimum(double h);

}  // namespace sudler
