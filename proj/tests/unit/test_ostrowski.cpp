#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "sudler/ostrowski.hpp"

using namespace sudler;

namespace {

// Plain greedy over 64-bit denominators, written separately from encode().
std::vector<std::uint64_t> greedy(const ConvergentTable& t, std::uint64_t N, std::size_t K) {
  std::vector<std::uint64_t> b(K, 0);
  for (std::size_t k = K; k-- > 0;) {
    const std::uint64_t q = t.q_u64(k);
    b[k] = N / q;
    N %= q;
  }
  return b;
}

OstrowskiDigits digits(std::initializer_list<std::uint64_t> b) { return OstrowskiDigits{std::vector<std::uint64_t>(b)}; }

const char* kRoundTrip[] = {"golden", "[0;(2)]", "[0;(5)]", "[0;2,(1,4)]"};

}  // namespace

TEST_CASE("worked examples") {
  ConvergentTable two = build_table(parse_alpha("[0;(2)]"), 8);
  CHECK(encode(two, BigInt(8)).b == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(decode(two, digits({1, 1, 1})) == 8);
  CHECK(encode(two, BigInt(0), 4).b == std::vector<std::uint64_t>{0, 0, 0, 0});

  ConvergentTable g = build_table(parse_alpha("golden"), 8);
  // golden has q_0 = q_1 = 1, so b_0 is always 0
  CHECK(encode(g, BigInt(4)).b == std::vector<std::uint64_t>{0, 1, 0, 1});

  ConvergentTable six = build_table(parse_alpha("[0;(6)]"), 6);
  OstrowskiDigits star = n_star(six, 3);
  CHECK(star.b == std::vector<std::uint64_t>{5, 5, 5});
  CHECK(decode(six, star) == 220);

  ConvergentTable fifty = build_table(parse_alpha("[0;(50)]"), 6);
  CHECK(n_star(fifty, 4).b == std::vector<std::uint64_t>{41, 41, 41, 41});
  CHECK(n_star(g, 3).b == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("b double star and the default delta_T") {
  CHECK(b_double_star(2, 0.3) == 0);
  CHECK(b_double_star(100, 0.01) == 99);
  CHECK(b_double_star(1, 0.01) == 0);
  CHECK(default_delta_T(1.0) == doctest::Approx(0.01));
  CHECK(default_delta_T(0.0) == doctest::Approx(0.01));
  CHECK(default_delta_T(2.0) == doctest::Approx(1.0 / (4 * M_PI * std::exp(4.0))).epsilon(1e-12));
}

TEST_CASE("invalid digits are reported") {
  ConvergentTable six = build_table(parse_alpha("[0;(6)]"), 6);
  CHECK(digit_violation(six, digits({6, 0})).has_value());     // b_0 <= a_1 - 1
  CHECK(digit_violation(six, digits({1, 6})).has_value());     // b_1 = a_2 needs b_0 = 0
  CHECK_FALSE(digit_violation(six, digits({0, 6})).has_value());
  CHECK_THROWS_AS(decode(six, digits({1, 7})), Error);
}

TEST_CASE("projection") {
  ConvergentTable fifty = build_table(parse_alpha("[0;(50)]"), 6);
  OstrowskiDigits star = n_star(fifty, 4);
  CHECK(project(fifty, star, 2, 41).b == star.b);
  CHECK(project(fifty, star, 2, 0).b == std::vector<std::uint64_t>{41, 41, 0, 41});
  try {
    project(fifty, star, 2, 50);
    FAIL("carry rule not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDigits);
  }
  CHECK_THROWS_AS(project(fifty, star, 0, 1), Error);   // below k0
  CHECK_THROWS_AS(project(fifty, star, 2, 51), Error);  // above a_{m+1}
}

TEST_CASE("greedy round trip below q_6") {
  for (const char* name : kRoundTrip) {
    ConvergentTable t = build_table(parse_alpha(name), 8);
    const std::uint64_t q6 = t.q_u64(6);
    for (std::uint64_t N = 0; N < q6; ++N) {
      OstrowskiDigits d = encode(t, BigInt(N), 6);
      REQUIRE(d.b == greedy(t, N, 6));
      REQUIRE(decode(t, d) == N);
    }
  }
}

TEST_CASE("valid digit vectors enumerate 0..q_K-1 exactly once") {
  for (const char* name : {"golden", "[0;(2)]", "[0;(5)]", "[0;2,(1,4)]", "[0;(2,50)]"}) {
    ConvergentTable t = build_table(parse_alpha(name), 8);
    for (std::size_t K = 1; K <= 5; ++K) {
      const std::uint64_t qK = t.q_u64(K);
      std::vector<char> seen(qK, 0);
      std::uint64_t count = 0;
      bool ok = true;
      for_each_valid_digits(t, K, [&](const OstrowskiDigits& d) {
        ++count;
        if (digit_violation(t, d)) ok = false;
        const std::uint64_t N = decode(t, d).convert_to<std::uint64_t>();
        if (N >= qK || seen[N]) ok = false;
        else seen[N] = 1;
      });
      CHECK(ok);
      CHECK(count == qK);
    }
  }
}

TEST_CASE("epsilon profile against an independent alternating sum") {
  std::mt19937_64 rng(11);
  for (const char* name : {"golden", "[0;(2)]", "[0;(5)]", "[0;2,(1,4)]", "[0;(50)]", "[0;(2,50)]"}) {
    ConvergentTable t = build_table(parse_alpha(name), 12);
    const std::size_t K = 8;
    const std::uint64_t qK = t.q_u64(K);
    std::size_t strengthened = 0;
    for (int i = 0; i < 10000; ++i) {
      const std::uint64_t N = rng() % qK;
      OstrowskiDigits d = encode(t, BigInt(N), K);
      EpsilonProfile e = epsilon_profile(t, d);
      for (std::size_t k = 0; k < K; ++k) {
        if (d.b[k] == 0) {
          CHECK_FALSE(e.eps[k].has_value());
          continue;
        }
        REQUIRE(e.eps[k].has_value());
        long double ref = 0;
        for (std::size_t l = k + 1; l < K; ++l) {
          const long double term = static_cast<long double>(d.b[l]) * t.theta_d(l);
          ref += (k + l) % 2 == 0 ? term : -term;
        }
        ref *= static_cast<long double>(t.q_u64(k));
        const double eps = e.eps[k]->convert_to<double>();
        CHECK(std::abs(eps - static_cast<double>(ref)) < 1e-12);
        const double lo = -t.delta_d(k) + t.eta_d(k), hi = t.eta_d(k);
        CHECK(lo > -1.0);
        CHECK(hi < 0.5);
        CHECK(eps > lo - 1e-15);
        CHECK(eps <= hi + 1e-15);
        // strengthened bound with delta = 1/10 whenever b_{k+1} leaves room
        if (k + 1 < K) {
          const double a2 = t.a[k + 2].convert_to<double>();
          if (d.b[k + 1] <= 0.9 * a2) {
            ++strengthened;
            CHECK(eps >= -(1.0 - 0.1 / 3) * t.delta_d(k) - 1e-15);
          }
        }
      }
      if (d.b[K - 1] > 0) CHECK(*e.eps[K - 1] == 0);
    }
    CHECK(strengthened > 0);
  }
}

TEST_CASE("epsilon at N* approaches -5/6 delta") {
  for (std::uint64_t a : {60, 300, 3000}) {
    ConvergentTable t = build_table(parse_alpha("[0;(" + std::to_string(a) + ")]"), 8);
    OstrowskiDigits star = n_star(t, 6);
    EpsilonProfile e = epsilon_profile(t, star);
    for (std::size_t k = 0; k + 1 < 6; ++k) {
      const double ratio = e.eps[k]->convert_to<double>() / t.delta_d(k);
      CHECK(std::abs(ratio + 5.0 / 6.0) < 3.0 / a);
    }
  }
  ConvergentTable t = build_table(parse_alpha("[0;(7)]"), 4);
  EpsilonProfile e = epsilon_profile(t, digits({3}));
  CHECK(*e.eps[0] == 0);
}
