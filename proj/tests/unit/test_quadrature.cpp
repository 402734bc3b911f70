#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/zeta.hpp>

#include "sudler/numeric.hpp"
#include "sudler/quadrature.hpp"

using namespace sudler;

namespace {

// Clausen function from its zeta series, valid for |theta| < 2 pi; used on
// |theta| <= pi where it converges like 4^-n.
double clausen(double theta) {
  if (theta == 0) return 0;
  long double s = theta - theta * std::log(std::abs(theta));
  const long double r = theta / (2 * M_PI);
  long double pw = theta;
  for (int n = 1; n < 80; ++n) {
    pw *= r * r;
    s += boost::math::zeta(2.0L * n) / (n * (2.0L * n + 1)) * pw;
  }
  return static_cast<double>(s);
}

// int_0^y log|2 sin(pi x)| dx = -Cl_2(2 pi y) / (2 pi), with Cl_2 odd about 2 pi.
double antiderivative_oracle(double y) {
  if (y <= 0.5) return -clausen(2 * M_PI * y) / (2 * M_PI);
  return clausen(2 * M_PI * (1 - y)) / (2 * M_PI);
}

}  // namespace

TEST_CASE("figure-eight volume") {
  const double V = 2 * clausen(M_PI / 3);
  CHECK(V == doctest::Approx(2.029883212819307).epsilon(1e-13));
  CHECK(vol41() == doctest::Approx(V).epsilon(1e-11));
  CHECK(std::abs(vol41() - 2.02988) < 5e-6);
}

TEST_CASE("log-sine antiderivative against the Clausen series") {
  for (double y : {0.0, 1e-6, 5e-4, 1e-3, 0.01, 0.1, 1.0 / 6, 0.3, 0.5, 0.7, 5.0 / 6, 0.95, 0.999, 0.9999, 1.0}) {
    CHECK(log_sin_antiderivative(y) == doctest::Approx(antiderivative_oracle(y)).epsilon(1e-9).scale(1));
  }
  CHECK(std::abs(log_sin_antiderivative(1.0)) < 1e-9);
  CHECK(log_sin_integral(0.2, 0.7) == doctest::Approx(antiderivative_oracle(0.7) - antiderivative_oracle(0.2)));
  CHECK(log_sin_integral(0.7, 0.2) == -log_sin_integral(0.2, 0.7));
  CHECK(log_sin_integral(1.0 / 6, 5.0 / 6) > 0);
  CHECK_THROWS_AS(log_sin_antiderivative(1.5), Error);
}

TEST_CASE("Gamma reflection and the Bernoulli integrals") {
  CHECK(std::tgamma(1.0 / 6) * std::tgamma(5.0 / 6) == doctest::Approx(2 * M_PI).epsilon(1e-12));
  auto [n1, n2] = bernoulli_b2_integrals();
  auto [c1, c2] = bernoulli_b2_closed_forms();
  CHECK(std::abs(n1 - c1) < 1e-6);
  CHECK(std::abs(n2 - c2) < 1e-6);
}

TEST_CASE("concavity constant") {
  auto [lo, at] = concavity_minimum(1e-3);
  const double expect = 9 * vol41() / (25 * M_PI);
  CHECK(expect == doctest::Approx(0.2326).epsilon(1e-4));
  CHECK(std::abs(lo - expect) < 1e-6);
  CHECK(at == 0.0);
}
