#include "sudler/cotangent.hpp"

#include <cmath>
#include <numeric>

#include "sudler/sudler.hpp"

namespace sudler {

namespace {

struct KData {
  std::int64_t q;
  std::int64_t sp;  // (-1)^k p_k mod q_k
  std::int64_t q_prev;
  double theta;
};

KData k_data(const ConvergentTable& table, std::size_t k) {
  if (k < 1 || k > table.K_max) throw Error(ErrorKind::OutOfRange, "cotangent sums need 1 <= k <= K_max");
  if (table.q[k] > kCotangentBudget)
    throw Error(ErrorKind::Budget, "q_" + std::to_string(k) + " = " + table.q[k].str() +
                                       " exceeds the direct-summation cap of 10^7");
  KData d;
  d.q = table.q[k].convert_to<std::int64_t>();
  BigInt p = table.p[k] % table.q[k];
  if (p < 0) p += table.q[k];
  if (k % 2 == 1) p = (table.q[k] - p) % table.q[k];
  d.sp = p.convert_to<std::int64_t>();
  d.q_prev = table.q[k - 1].convert_to<std::int64_t>();
  d.theta = table.theta_d(k);
  return d;
}

inline double centred(std::int64_t r, std::int64_t q) {
  return 2 * r > q ? static_cast<double>(r - q) : static_cast<double>(r);
}

double cot_pi_over(double num, double q) {
  if (num == 0.0) throw Error(ErrorKind::Pole, "cotangent pole");
  const double y = M_PI * num / q;
  return std::cos(y) / std::sin(y);
}

double sum_v(const KData& d, double x, bool starred) {
  const double qd = static_cast<double>(d.q);
  CompensatedSum acc;
  std::int64_t r = 0;
  for (std::int64_t n = 1; n < d.q; ++n) {
    r += d.sp;
    if (r >= d.q) r -= d.q;
    if (starred && (n == d.q_prev || n == d.q - d.q_prev)) continue;
    const double w = std::sin(M_PI * static_cast<double>(n) * d.theta / qd);
    acc.add(w * cot_pi_over(centred(r, d.q) + x, qd));
  }
  return acc.value();
}

}  // namespace

const char* to_string(CotangentKind kind) {
  switch (kind) {
    case CotangentKind::C_k: return "C_k";
    case CotangentKind::V_k: return "V_k";
    case CotangentKind::V_k_star: return "V_k_star";
  }
  return "unknown";
}

double vasyunin(std::int64_t p, std::int64_t q, double x, int parity_sign) {
  if (q < 1) throw Error(ErrorKind::OutOfRange, "q must be positive");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::OutOfRange, "p/q must be reduced");
  if (q > static_cast<std::int64_t>(kCotangentBudget))
    throw Error(ErrorKind::Budget, "q exceeds the direct-summation cap of 10^7");
  const double qd = static_cast<double>(q);
  const double sx = parity_sign < 0 ? -x : x;
  std::int64_t step = p % q;
  if (step < 0) step += q;
  CompensatedSum acc;
  std::int64_t r = 0;
  for (std::int64_t n = 1; n < q; ++n) {
    r += step;
    if (r >= q) r -= q;
    acc.add(static_cast<double>(n) / qd * cot_pi_over(centred(r, q) + sx, qd));
  }
  return acc.value();
}

CotangentSumValue c_k(const ConvergentTable& table, std::size_t k, double x) {
  KData d = k_data(table, k);
  BigInt p = table.p[k] % table.q[k];
  if (p < 0) p += table.q[k];
  CotangentSumValue out;
  out.value = vasyunin(p.convert_to<std::int64_t>(), d.q, x, k % 2 == 0 ? 1 : -1);
  out.k = k;
  out.x = x;
  out.kind = CotangentKind::C_k;
  return out;
}

CotangentSumValue v_k(const ConvergentTable& table, std::size_t k, double x) {
  if (!(x > -1.0 && x < 1.0)) throw Error(ErrorKind::OutOfRange, "V_k needs |x| < 1");
  CotangentSumValue out;
  out.value = sum_v(k_data(table, k), x, false);
  out.k = k;
  out.x = x;
  out.kind = CotangentKind::V_k;
  return out;
}

CotangentSumValue v_k_star(const ConvergentTable& table, std::size_t k, double x) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "V_k* needs k >= 2");
  if (!(x > -2.0 && x < 2.0)) throw Error(ErrorKind::OutOfRange, "V_k* needs |x| < 2");
  CotangentSumValue out;
  out.value = sum_v(k_data(table, k), x, true);
  out.k = k;
  out.x = x;
  out.kind = CotangentKind::V_k_star;
  return out;
}

std::vector<double> v_k_grid(const ConvergentTable& table, std::size_t k,
                             const std::vector<double>& xs, bool starred) {
  const double lim = starred ? 2.0 : 1.0;
  if (starred && k < 2) throw Error(ErrorKind::OutOfRange, "V_k* needs k >= 2");
  for (double x : xs)
    if (!(x > -lim && x < lim)) throw Error(ErrorKind::OutOfRange, "shift outside the admissible range");
  const KData d = k_data(table, k);
  const double qd = static_cast<double>(d.q);
  const std::size_t G = xs.size();
  std::vector<double> sb(G), cb(G);
  for (std::size_t j = 0; j < G; ++j) {
    sb[j] = std::sin(M_PI * xs[j] / qd);
    cb[j] = std::cos(M_PI * xs[j] / qd);
  }
  std::vector<CompensatedSum> acc(G);
  std::int64_t r = 0;
  for (std::int64_t n = 1; n < d.q; ++n) {
    r += d.sp;
    if (r >= d.q) r -= d.q;
    if (starred && (n == d.q_prev || n == d.q - d.q_prev)) continue;
    const double w = std::sin(M_PI * static_cast<double>(n) * d.theta / qd);
    const double a = M_PI * centred(r, d.q) / qd;
    const double sa = std::sin(a), ca = std::cos(a);
    for (std::size_t j = 0; j < G; ++j) {
      // cot(a + b) = (cos a cos b - sin a sin b) / (sin a cos b + cos a sin b)
      const double den = sa * cb[j] + ca * sb[j];
      if (den == 0.0) throw Error(ErrorKind::Pole, "cotangent pole");
      acc[j].add(w * (ca * cb[j] - sa * sb[j]) / den);
    }
  }
  std::vector<double> out(G);
  for (std::size_t j = 0; j < G; ++j) out[j] = acc[j].value();
  return out;
}

double digamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::OutOfRange, "digamma needs a positive argument");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Bernoulli tail: B_{2j} / (2j x^{2j}), j = 1..8
  static const double coef[] = {1.0 / 12,     -1.0 / 120,        1.0 / 252,  -1.0 / 240,
                                1.0 / 132,    -691.0 / 32760,    1.0 / 12,   -3617.0 / 8160};
  double series = 0.0;
  for (int j = 7; j >= 0; --j) series = (series + coef[j]) * inv2;
  return std::log(x) - 0.5 / x - series - shift;
}

double v_k_main_term(const ConvergentTable& table, std::size_t k, double x, bool starred) {
  const double a = static_cast<double>(table.a_u64(k));
  const double psi = digamma((starred ? 2.0 : 1.0) + x);
  return table.delta_d(k) * (std::log(a / (2.0 * M_PI)) - psi);
}

}  // namespace sudler
