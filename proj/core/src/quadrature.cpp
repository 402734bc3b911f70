#include "sudler/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sudler/numeric.hpp"

namespace sudler {

namespace {

constexpr double kSplinter = 1e-3;

// int_0^y log(2 sin(pi x)) dx for 0 <= y <= kSplinter: the log part exactly,
// the rest from the series log(sin u / u) = -u^2/6 - u^4/180 - u^6/2835.
double near_zero(double y) {
  if (y == 0.0) return 0.0;
  const double p2 = M_PI * M_PI;
  const double smooth = -p2 * y * y * y / 18.0 - p2 * p2 * std::pow(y, 5) / 900.0 -
                        p2 * p2 * p2 * std::pow(y, 7) / 19845.0;
  return y * (std::log(2.0 * M_PI * y) - 1.0) + smooth;
}

double middle(double y0, double y1) {
  // 2 sin(pi x) - 1 as a product around the nearer root 1/6 or 5/6, so the
  // integrand keeps full relative accuracy where it vanishes
  auto f = [](double x) {
    const double r = x > 0.5 ? 5.0 / 6.0 : 1.0 / 6.0;
    return std::log1p(4.0 * std::cos(M_PI * (x + r) / 2) * std::sin(M_PI * (x - r) / 2));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, y0, y1, 15, 1e-10);
}

}  // namespace

double log_sin_antiderivative(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw Error(ErrorKind::OutOfRange, "log_sin integral needs 0 <= y <= 1");
  if (y <= kSplinter) return near_zero(y);
  if (y <= 1.0 - kSplinter) return near_zero(kSplinter) + middle(kSplinter, y);
  // reflect the last splinter onto the first: x -> 1 - x
  static const double upto = near_zero(kSplinter) + middle(kSplinter, 1.0 - kSplinter);
  return upto + near_zero(kSplinter) - near_zero(1.0 - y);
}

double log_sin_integral(double y0, double y1) {
  if (y0 == y1) return 0.0;
  if (y0 > y1) return -log_sin_integral(y1, y0);
  if (!(y0 >= 0.0 && y1 <= 1.0)) throw Error(ErrorKind::OutOfRange, "log_sin integral needs 0 <= y <= 1");
  // both ends inside the smooth region: integrate directly
  if (y0 >= kSplinter && y1 <= 1.0 - kSplinter) return middle(y0, y1);
  return log_sin_antiderivative(y1) - log_sin_antiderivative(y0);
}

double vol41() { return 4.0 * M_PI * log_sin_antiderivative(5.0 / 6.0); }

std::pair<double, double> bernoulli_b2_integrals() {
  using boost::math::quadrature::gauss;
  auto periodized = [](double s) {
    // sum over unit cells [n, n+1], then the tail from
    // int_0^1 B_2(u) (c+u)^-2 du = 1/(120 c^4) - 1/(60 c^5) + O(c^-6), c = n - s
    const int cells = 4000;
    double sum = 0.0;
    for (int n = cells; n >= 1; --n) {
      auto f = [n, s](double u) { return (u * u / 2 - u / 2 + 1.0 / 12) / ((n + u - s) * (n + u - s)); };
      sum += gauss<double, 30>::integrate(f, 0.0, 1.0);
    }
    // sum_{n > cells} of the expansion, replaced by its midpoint integral
    const double c = cells + 0.5 - s;
    return sum + 1.0 / (360.0 * c * c * c) - 1.0 / (240.0 * c * c * c * c);
  };
  return {periodized(5.0 / 6.0), periodized(0.0)};
}

std::pair<double, double> bernoulli_b2_closed_forms() {
  const double first =
      1.0 / 3.0 - std::log(std::tgamma(1.0 / 6.0) /
                           (std::pow(2.0, 5.0 / 6.0) * std::cbrt(3.0) * std::sqrt(M_PI)));
  const double second = -11.0 / 12.0 + std::log(std::sqrt(2.0 * M_PI));
  return {first, second};
}

std::pair<double, double> concavity_minimum(double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::OutOfRange, "grid step must be positive");
  double best = INFINITY, where = 0.0;
  for (long i = 0;; ++i) {
    const double y = i * h;
    if (y >= 5.0 / 6.0 - h / 2) break;
    const double w = 5.0 / 6.0 - y;
    const double v = log_sin_integral(y, 5.0 / 6.0) / (w * w);
    if (v < best) {
      best = v;
      where = y;
    }
  }
  return {best, where};
}

}  // namespace sudler
