#include <doctest.h>

#include <cmath>

#include "sudler/quadrature.hpp"
#include "sudler/scan.hpp"
#include "sudler/sudler.hpp"
#include "sudler/theorems.hpp"

using namespace sudler;

namespace {

ConvergentTable pure(std::uint64_t a, std::size_t K = 8) {
  return build_table(parse_alpha("[0;(" + std::to_string(a) + ")]"), K);
}

double naive_log(long double alpha, std::uint64_t N) {
  long double s = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    long double t = n * alpha;
    t -= std::floor(t);
    s += std::log(std::abs(2 * std::sin(static_cast<long double>(M_PI) * t)));
  }
  return static_cast<double>(s);
}

}  // namespace

TEST_CASE("constants") {
  CHECK(quadratic_constant() == doctest::Approx(2.7207).epsilon(1e-4));
  CHECK(d_k_lower_constant() == doctest::Approx(0.2326).epsilon(1e-3));
}

TEST_CASE("d_k terms") {
  ConvergentTable t = pure(50);
  OstrowskiDigits star = n_star(t, 4);
  DkTerms at_star = d_k_terms(t, star, 4, 1.0);
  CHECK(at_star.total == 0.0);
  CHECK(at_star.condition_holds);
  OstrowskiDigits d = project(t, star, 2, 0);
  DkTerms off = d_k_terms(t, d, 4, 1.0);
  CHECK(off.terms[2].main == doctest::Approx(50 * log_sin_antiderivative(41.0 / 50)));
  CHECK(off.terms[2].regime == DkRegime::FormulaII);
  CHECK(off.total == doctest::Approx(off.terms[2].main));
  d = project(t, project(t, star, 2, 0), 3, 50);
  CHECK(d_k_terms(t, d, 4, 1.0).terms[3].regime == DkRegime::OutOfRegime);
  CHECK(d_k_terms(t, star, 4, 1.0, 2).terms[1].regime == DkRegime::Quadratic);
  // the concavity bound holds up to the slack that the floor in b* costs
  const double slack = dk_lower_gap(50);
  CHECK(slack < 0.1);
  for (std::uint64_t b = 0; b <= 50; ++b) {
    const double v = 50 * log_sin_integral(b / 50.0, 41 / 50.0);
    CHECK(v >= d_k_lower_constant() * (b - 41.0) * (b - 41.0) / 50 - slack - 1e-6);
    if (b < 35) CHECK(v > 0);
  }
  // near b* the integral and the quadratic agree up to the floor offset and the cubic term
  ConvergentTable big = pure(3000, 4);
  OstrowskiDigits s2 = n_star(big, 3);
  for (int j : {-6, -2, 1, 5}) {
    OstrowskiDigits p = project(big, s2, 1, s2.b[1] + j);
    DkTerm term = d_k_terms(big, p, 3, 1.0).terms[1];
    const double a = 3000;
    CHECK(std::abs(term.main - term.quad) <= quadratic_constant() * (2 * std::abs(j) + 1) / a +
                                                 20.0 * std::abs(j * j * j) / (a * a));
  }
  CHECK(dk_lower_gap(60) < 0.05);
}

TEST_CASE("the three-term split is exact on a single block row") {
  ConvergentTable t = pure(20);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint64_t b : {1, 7, 16}) {
      OstrowskiDigits d;
      d.b.assign(5, 0);
      d.b[k] = b;
      const double total = decompose(t, d).total;
      CHECK(u_k_value(t, d, k) + e_k_residual(t, d, k) == doctest::Approx(total).epsilon(1e-10));
      d.b[k] = 0;
      CHECK(u_k_value(t, d, k) == 0.0);
    }
  }
}

TEST_CASE("P_N* prediction") {
  ConvergentTable t = pure(50);
  const long double alpha = (std::sqrt(2504.0L) - 50) / 2;
  PredictionReport r = pnstar_prediction(t, 3, 1.0);
  CHECK(r.observed == doctest::Approx(naive_log(alpha, 104632)).epsilon(1e-9));
  CHECK(r.prediction == doctest::Approx(3 * (vol41() / (4 * M_PI) * 50 + 0.5 * std::log(50.0))));
  CHECK(std::abs(r.observed - r.prediction) < 1.0);
  CHECK(theorem3_shape(t, 3) > 1.0);
}

TEST_CASE("theorem 1 reports") {
  ConvergentTable t = pure(10);
  const std::uint64_t star = decode(t, n_star(t, 3)).convert_to<std::uint64_t>();
  std::vector<PredictionReport> r = theorem1_check(t, 3, 1.0, {star, 0, 5, 999}, 10.0, 1, 2);
  REQUIRE(r.size() == 4);
  CHECK(r[0].observed == 0.0);
  CHECK(r[0].prediction == 0.0);
  CHECK(r[0].pass);
  CHECK(r[1].observed == doctest::Approx(-log_sudler(t, BigInt(star)).log_value));
  CHECK_THROWS_AS(theorem1_check(t, 3, 1.0, {t.q_u64(3)}, 1.0), Error);
  const double slope = quadratic_law_slope(pure(50), 3, 1, 6);
  CHECK(std::abs(slope / quadratic_constant() - 1) < 0.15);
}

TEST_CASE("norm prediction reads the scan") {
  ConvergentTable t = pure(30);
  ScanOptions o;
  o.c_list = {0.5, 2};
  ScanResult s = scan(t, 2, o);
  PredictionReport r = lcnorm_prediction(t, 2, 2, 1.0, s);
  CHECK(r.observed == doctest::Approx(s.sums[1].log_sum / 2));
  CHECK_THROWS_AS(lcnorm_prediction(t, 2, 64, 1.0, s), Error);
  CHECK(theorem2_shape(t, 2, 0.5) > theorem2_shape(t, 2, 2));
}
