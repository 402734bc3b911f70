#include "sudler/theorems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "sudler/cotangent.hpp"
#include "sudler/quadrature.hpp"
#include "sudler/sudler.hpp"

namespace sudler {

namespace {

// b delta_k + eps_k for b = 0..b_k, at working precision.
std::vector<Real> block_shifts(const ConvergentTable& table, const OstrowskiDigits& digits,
                               std::size_t k) {
  EpsilonProfile eps = epsilon_profile(table, digits);
  const unsigned wb = table.bits();
  std::vector<Real> out;
  for (std::uint64_t b = 0; b <= digits.b[k]; ++b)
    out.push_back(table.delta[k] * make_real(static_cast<long>(b), wb) + *eps.eps[k]);
  return out;
}

void check_level(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k) {
  if (k < 1 || k >= digits.K()) throw Error(ErrorKind::OutOfRange, "level k outside [1, K-1]");
  if (k > table.K_max) throw Error(ErrorKind::OutOfRange, "k beyond the convergent table");
}

double u_k_from_shifts(const ConvergentTable& table, std::size_t k, const std::vector<Real>& t) {
  const std::size_t bk = t.size() - 1;
  std::vector<double> xs;
  CompensatedSum acc;
  for (std::size_t b = 0; b < bk; ++b) {
    const double x = t[b].convert_to<double>();
    xs.push_back(x);
    if (b >= 1) acc.add(std::log(std::abs(2.0 * std::sin(M_PI * x))));
  }
  for (double v : v_k_grid(table, k, xs, false)) acc.add(v);
  const double last = t[bk].convert_to<double>();
  if (!(last > 0.0)) throw Error(ErrorKind::Pole, "non-positive boundary term in u_k");
  acc.add(std::log(2.0 * M_PI * last));
  return acc.value();
}

std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> m) {
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

PredictionReport make_report(std::string label, double prediction, double observed, double budget) {
  PredictionReport r;
  r.label = std::move(label);
  r.prediction = prediction;
  r.observed = observed;
  r.error_budget = budget;
  r.pass = std::abs(prediction - observed) <= budget;
  return r;
}

double quadratic_constant() { return M_PI * std::sqrt(3.0) / 2.0; }

double d_k_lower_constant() { return 9.0 * vol41() / (25.0 * M_PI); }

const char* to_string(DkRegime r) {
  switch (r) {
    case DkRegime::FormulaII: return "formula-ii";
    case DkRegime::Quadratic: return "quadratic";
    case DkRegime::OutOfRegime: return "out-of-regime";
  }
  return "unknown";
}

DkTerms d_k_terms(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t K,
                  double T, std::size_t k0) {
  if (digits.K() != K) throw Error(ErrorKind::InvalidDigits, "digit vector length differs from K");
  if (auto bad = digit_violation(table, digits)) throw Error(ErrorKind::InvalidDigits, *bad);
  DkTerms out;
  CompensatedSum total;
  for (std::size_t k = 0; k < K; ++k) {
    DkTerm t;
    t.k = k;
    t.b = digits.b[k];
    t.a_next = table.a_u64(k + 1);
    t.b_star = t.a_next * 5 / 6;
    const double a = static_cast<double>(t.a_next);
    const double diff = static_cast<double>(t.b) - static_cast<double>(t.b_star);
    t.quad = quadratic_constant() * diff * diff / a;
    t.main = a * log_sin_integral(static_cast<double>(t.b) / a, static_cast<double>(t.b_star) / a);
    if (k < k0) {
      t.regime = DkRegime::Quadratic;
    } else if (static_cast<double>(t.b) <= 0.99 * a) {
      t.regime = DkRegime::FormulaII;
    } else {
      t.regime = DkRegime::OutOfRegime;
    }
    total.add(t.value());
    out.terms.push_back(t);
  }
  for (std::size_t k = std::max<std::size_t>(k0, 1); k <= K; ++k)
    if (std::log(static_cast<double>(table.a_u64(k))) / static_cast<double>(table.a_u64(k + 1)) > T)
      out.condition_holds = false;
  out.total = total.value();
  return out;
}

double u_k_value(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k) {
  check_level(table, digits, k);
  if (digits.b[k] == 0) return 0.0;
  return u_k_from_shifts(table, k, block_shifts(table, digits, k));
}

double U_N(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k0) {
  if (k0 < 1) throw Error(ErrorKind::OutOfRange, "k0 must be at least 1");
  CompensatedSum acc;
  for (std::size_t k = k0; k < digits.K(); ++k) acc.add(u_k_value(table, digits, k));
  return acc.value();
}

double e_k_residual(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k) {
  check_level(table, digits, k);
  if (digits.b[k] == 0) throw Error(ErrorKind::OutOfRange, "E_k needs b_k >= 1");
  const std::vector<Real> t = block_shifts(table, digits, k);
  const std::uint64_t qk = table.q_u64(k);
  const Real qk_r = make_real(table.q[k], table.bits());
  CompensatedSum blocks;
  for (std::uint64_t b = 0; b < digits.b[k]; ++b) {
    Real x = t[b] / qk_r;
    if (k % 2 == 1) x = -x;
    LogProduct f = log_sudler_shifted_phase(table, qk, phase_of_real(x));
    if (f.zero) throw Error(ErrorKind::Pole, "vanishing block");
    blocks.add(f.log_value);
  }
  return blocks.value() - u_k_from_shifts(table, k, t);
}

double theorem1_shape(const ConvergentTable& table, std::size_t K) {
  double s = 1.0;
  for (std::size_t k = 1; k <= K; ++k) s += 1.0 / static_cast<double>(table.a_u64(k));
  return s;
}

double theorem2_shape(const ConvergentTable& table, std::size_t K, double c) {
  double s = 1.0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = static_cast<double>(table.a_u64(k));
    const double L = std::log(a / c + 2.0);
    s += std::sqrt(L) / std::sqrt(c * a) + std::pow(L, 1.5) / (std::pow(c, 1.5) * std::sqrt(a)) + 1.0 / a;
  }
  return s;
}

double theorem3_shape(const ConvergentTable& table, std::size_t K) {
  double s = 1.0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = static_cast<double>(table.a_u64(k));
    const double an = static_cast<double>(table.a_u64(k + 1));
    s += (1.0 + std::log(a * an)) / an;
  }
  return s;
}

double pnstar_main_term(const ConvergentTable& table, std::size_t K) {
  const double v = vol41() / (4.0 * M_PI);
  double s = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = static_cast<double>(table.a_u64(k));
    s += v * a + 0.5 * std::log(a);
  }
  return s;
}

PredictionReport pnstar_prediction(const ConvergentTable& table, std::size_t K, double C_cal) {
  LogProduct star = log_sudler(table, decode(table, n_star(table, K)));
  return make_report("theorem3 K=" + std::to_string(K), pnstar_main_term(table, K), star.log_value,
                     C_cal * theorem3_shape(table, K));
}

PredictionReport lcnorm_prediction(const ConvergentTable& table, std::size_t K, double c,
                                   double C_cal, const ScanResult& scan_result) {
  if (!(c >= 0.01)) throw Error(ErrorKind::OutOfRange, "c must be at least 0.01");
  if (scan_result.K != K) throw Error(ErrorKind::Internal, "scan result is for a different K");
  const ScanSum* hit = nullptr;
  for (const ScanSum& s : scan_result.sums)
    if (s.c == c) hit = &s;
  if (!hit) throw Error(ErrorKind::Internal, "scan result lacks the requested c");
  LogProduct star = log_sudler(table, decode(table, n_star(table, K)));
  double pred = star.log_value;
  for (std::size_t k = 1; k <= K; ++k)
    pred += std::log(2.0 * static_cast<double>(table.a_u64(k)) / (std::sqrt(3.0) * c)) / (2.0 * c);
  char buf[64];
  std::snprintf(buf, sizeof buf, "theorem2 K=%zu c=%g", K, c);
  return make_report(buf, pred, hit->log_sum / c, C_cal * theorem2_shape(table, K, c));
}

std::vector<PredictionReport> theorem1_check(const ConvergentTable& table, std::size_t K,
                                             double T, const std::vector<std::uint64_t>& sample,
                                             double C_cal, std::size_t k0, unsigned parallelism) {
  if (K > table.K_max) throw Error(ErrorKind::OutOfRange, "K beyond the convergent table");
  const std::uint64_t qK = table.q_u64(K);
  for (std::uint64_t N : sample)
    if (N >= qK) throw Error(ErrorKind::OutOfRange, "sample point not below q_K");
  const double star = log_sudler(table, decode(table, n_star(table, K))).log_value;
  const double budget = C_cal * theorem1_shape(table, K);
  std::vector<PredictionReport> out(sample.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const BigInt N(static_cast<unsigned long long>(sample[i]));
      OstrowskiDigits d = encode(table, N, K);
      DkTerms dk = d_k_terms(table, d, K, T, k0);
      const double obs = log_sudler(table, N).log_value - star;
      out[i] = make_report("theorem1 N=" + std::to_string(sample[i]), -dk.total, obs, budget);
    }
  };
  const unsigned P = std::max(1u, parallelism);
  if (P == 1 || sample.size() < 2) {
    work(0, sample.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t step = (sample.size() + P - 1) / P;
    for (std::size_t lo = 0; lo < sample.size(); lo += step)
      pool.emplace_back(work, lo, std::min(sample.size(), lo + step));
    for (auto& t : pool) t.join();
  }
  return out;
}

double quadratic_law_slope(const ConvergentTable& table, std::size_t K, std::size_t m, int J) {
  if (m >= K) throw Error(ErrorKind::OutOfRange, "digit index outside [0, K-1]");
  const OstrowskiDigits star = n_star(table, K);
  const double base = log_sudler(table, decode(table, star)).log_value;
  const double a = static_cast<double>(table.a_u64(m + 1));
  // normal equations for y = s (-j^2) + l j + c
  std::array<std::array<double, 4>, 3> M{};
  for (int j = -J; j <= J; ++j) {
    if (j == 0) continue;
    const long b = static_cast<long>(star.b[m]) + j;
    if (b < 0) throw Error(ErrorKind::OutOfRange, "perturbation below zero");
    OstrowskiDigits d = star;
    d.b[m] = static_cast<std::uint64_t>(b);
    if (auto bad = digit_violation(table, d)) throw Error(ErrorKind::InvalidDigits, *bad);
    const double y = a * (log_sudler(table, decode(table, d)).log_value - base);
    const std::array<double, 3> row = {-static_cast<double>(j) * j, static_cast<double>(j), 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) M[r][c] += row[r] * row[c];
      M[r][3] += row[r] * y;
    }
  }
  return solve3(M)[0];
}

std::uint64_t argmax_distance(const ConvergentTable& table, std::size_t K, unsigned parallelism) {
  ScanOptions opts;
  opts.parallelism = parallelism;
  opts.keep_values_limit = 0;
  ScanResult r = scan(table, K, opts);
  OstrowskiDigits d = encode(table, BigInt(static_cast<unsigned long long>(r.argmax_N)), K);
  OstrowskiDigits s = n_star(table, K);
  std::uint64_t worst = 0;
  for (std::size_t k = 0; k < K; ++k)
    worst = std::max(worst, d.b[k] > s.b[k] ? d.b[k] - s.b[k] : s.b[k] - d.b[k]);
  return worst;
}

}  // namespace sudler

namespace sudler {

double vk_envelope_ratio(const ConvergentTable& table, std::size_t k, const std::vector<double>& xs,
                         bool starred, double T) {
  if (k < 2) throw Error(ErrorKind::OutOfRange, "envelope needs k >= 2");
  const std::vector<double> v = v_k_grid(table, k, xs, starred);
  const double delta = table.delta_d(k);
  const double a = static_cast<double>(table.a_u64(k));
  const double ap = static_cast<double>(table.a_u64(k - 1));
  const double edge = starred ? 2.0 : 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double main = std::log(a / (2.0 * M_PI)) - digamma(edge + x);
    const double shape = (T + std::log(ap * a)) / ((edge - std::abs(x)) * a);
    worst = std::max(worst, std::abs(v[i] / delta - main) / shape);
  }
  return worst;
}

double vk0_ratio(const ConvergentTable& table, std::size_t k) {
  std::uint64_t amax = 1;
  for (std::size_t l = 1; l <= k; ++l) amax = std::max(amax, table.a_u64(l));
  const double v = v_k(table, k, 0.0).value;
  return std::abs(v) * static_cast<double>(table.a_u64(k + 1)) /
         (1.0 + std::log(static_cast<double>(amax)));
}

double b_transfer_ratio(const ConvergentTable& table, std::size_t k, std::uint64_t M, double x) {
  const double a = static_cast<double>(table.a_u64(k + 1));
  const double w = 1.0 - std::abs(x);
  return std::abs(b_transfer(table, k, M, x)) * w * w * a * a;
}

double ek_ratio(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k) {
  return e_k_residual(table, digits, k) * static_cast<double>(table.a_u64(k + 1)) *
         static_cast<double>(table.q_u64(k));
}

double pnun_residual(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k0) {
  return log_sudler(table, decode(table, digits)).log_value - U_N(table, digits, k0);
}

double dk_lower_gap(std::uint64_t a) {
  const double ad = static_cast<double>(a);
  const std::uint64_t bs = a * 5 / 6;
  double worst = -INFINITY;
  for (std::uint64_t b = 0; b <= a; ++b) {
    const double diff = static_cast<double>(b) - static_cast<double>(bs);
    const double main = ad * log_sin_integral(static_cast<double>(b) / ad, static_cast<double>(bs) / ad);
    worst = std::max(worst, 0.2326 * diff * diff / ad - main);
  }
  return worst;
}

}  // namespace sudler
