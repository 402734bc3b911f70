#include <doctest.h>

#include <cmath>

#include "sudler/limitfn.hpp"
#include "sudler/sudler.hpp"

using namespace sudler;

namespace {

double sup_dev_from_two_sin(const ConvergentTable& t, std::size_t k, const std::vector<double>& xs) {
  std::vector<double> e = empirical_limit(t, k, xs);
  double worst = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    worst = std::max(worst, std::abs(e[i] - std::abs(2 * std::sin(M_PI * xs[i]))));
  return worst;
}

}  // namespace

TEST_CASE("limit constants against the convergent table") {
  for (const char* name : {"[0;(5)]", "golden", "[0;(2,50)]", "[0;2,(1,4)]", "[0;(3,1,7)]"}) {
    AlphaSpec a = parse_alpha(name);
    ConvergentTable t = build_table(a, 40);
    for (std::size_t k = 36; k <= 39; ++k) {
      const std::size_t r = residue_of_index(a, k);
      LimitConstants lc = limit_constants(a, r);
      CHECK(lc.C == doctest::Approx(t.delta_d(k)).epsilon(1e-12));
      const double D = (make_real(t.q[k - 1], 256) * t.theta[k]).convert_to<double>();
      CHECK(lc.D == doctest::Approx(D).epsilon(1e-12));
      CHECK(0 < lc.D);
      CHECK(lc.D < lc.C);
      CHECK(lc.C < 1);
      CHECK(BigInt(lc.a_r) == t.a[k]);
      CHECK(BigInt(lc.a_next) == t.a[k + 1]);
    }
  }
  LimitConstants five = limit_constants(parse_alpha("[0;(5)]"), 1);
  CHECK(five.C == doctest::Approx(1 / std::sqrt(29.0)));
  CHECK(five.D == doctest::Approx((std::sqrt(29.0) - 5) / (2 * std::sqrt(29.0))));
  CHECK_THROWS_AS(limit_constants(parse_alpha("[0;(5)]"), 2), Error);
  CHECK_THROWS_AS(limit_constants(parse_alpha("[0;3,4]"), 1), Error);
}

TEST_CASE("main term zeros and singularities") {
  for (std::uint64_t a : {3, 15, 50}) {
    const double s = std::sqrt(double(a * a + 4)), C = 1 / s, D = (s - a) / (2 * s);
    CHECK(std::abs(g_alpha(a, -C)) < 1e-12);
    CHECK(std::abs(g_alpha(a, 1 - D)) < 1e-12);
    CHECK(std::abs(g_alpha(a, -1 - (C - D))) < 1e-12);
    // at the removable points the value is finite and positive
    for (double x : {-1.0, 0.0, 1.0}) {
      const double v = g_alpha(a, x);
      CHECK(std::isfinite(v));
      CHECK(v > 0);
      CHECK(v == doctest::Approx(0.5 * (g_alpha(a, x - 1e-7) + g_alpha(a, x + 1e-7))).epsilon(1e-5));
    }
    AlphaSpec pure = parse_alpha("[0;(" + std::to_string(a) + ")]");
    for (int i = -199; i <= 200; ++i) {
      const double x = i / 100.0;
      CHECK(g_alpha_r(pure, 1, x) == doctest::Approx(g_alpha(a, x)).epsilon(1e-12).scale(1e-12));
    }
  }
}

TEST_CASE("empirical limit function") {
  ConvergentTable t = build_table(parse_alpha("[0;(50)]"), 8);
  std::vector<double> xs = {-0.9, -0.5, -0.1, 0.0, 0.2, 0.6, 0.95};
  for (std::size_t k = 2; k <= 3; ++k) {
    std::vector<double> e = empirical_limit(t, k, xs);
    CHECK(e[3] == doctest::Approx(std::exp(log_sudler(t, t.q[k]).log_value)).epsilon(1e-9));
    const double sgn = k % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double direct = log_sudler_shifted(t, t.q_u64(k), sgn * xs[i] / t.q_u64(k)).log_value;
      CHECK(e[i] == doctest::Approx(std::exp(direct)).epsilon(1e-9));
      // a = 50 already sits close to its limit curve
      CHECK(std::abs(e[i] - g_alpha(50, xs[i])) < 0.05);
    }
  }
  CHECK_THROWS_AS(empirical_limit(t, 6, xs), Error);
}

TEST_CASE("well-approximable alpha flattens onto |2 sin|") {
  ConvergentTable t = build_table(parse_alpha("rule:powers-of-two"), 8);
  std::vector<double> xs;
  for (int i = -18; i <= 18; ++i) xs.push_back(i / 20.0);
  const double d4 = sup_dev_from_two_sin(t, 4, xs);
  const double d5 = sup_dev_from_two_sin(t, 5, xs);
  const double d6 = sup_dev_from_two_sin(t, 6, xs);
  CHECK(d5 < d4);
  CHECK(d6 < d5);
}

TEST_CASE("level crossings") {
  std::vector<double> g = {0, 1, 2, 3};
  std::vector<double> v = {0, 2, 0, 2};
  std::vector<double> c = crossings(g, v, 1.0);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == doctest::Approx(0.5));
  CHECK(c[1] == doctest::Approx(1.5));
  CHECK(c[2] == doctest::Approx(2.5));
}
