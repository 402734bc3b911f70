#include "sudler_tools/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sudler/limitfn.hpp"
#include "sudler/scan.hpp"
#include "sudler/sudler.hpp"

namespace sudler::tools {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string alpha_text(const ConvergentTable& t) { return render(t.alpha); }

std::string levels_text(const std::vector<std::size_t>& ks) {
  std::string s;
  for (std::size_t k : ks) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s.empty() ? "none" : s;
}

}  // namespace

ConvergentTable pure_table(std::uint64_t a, std::size_t K_max, unsigned bits) {
  PrecisionConfig cfg;
  cfg.working_bits = bits;
  return build_table(parse_alpha("[0;(" + std::to_string(a) + ")]"), K_max, cfg);
}

std::vector<std::size_t> levels_within_cap(const ConvergentTable& table, std::size_t kmin,
                                           std::size_t kmax, std::uint64_t cap) {
  std::vector<std::size_t> out;
  for (std::size_t k = kmin; k <= std::min(kmax, table.K_max); ++k)
    if (table.q[k] <= cap) out.push_back(k);
  return out;
}

std::vector<double> envelope_grid(bool starred) {
  // -0.95:0.95:0.05, or -1.95:1.95:0.05 for the starred sums
  const int n = starred ? 39 : 19;
  std::vector<double> g;
  for (int i = -n; i <= n; ++i) g.push_back(i * 0.05);
  return g;
}

Measurement measure_vk_envelope(const ConvergentTable& table, bool starred, std::size_t kmin,
                                std::size_t kmax) {
  Measurement m;
  const auto ks = levels_within_cap(table, kmin, kmax);
  for (std::size_t k : ks)
    m.worst = std::max(m.worst, vk_envelope_ratio(table, k, envelope_grid(starred), starred));
  m.designated = alpha_text(table) + " k=" + levels_text(ks) + (starred ? " x=-1.95:1.95:0.05" : " x=-0.95:0.95:0.05");
  return m;
}

Measurement measure_vk0(const ConvergentTable& table, std::size_t kmax) {
  Measurement m;
  const auto ks = levels_within_cap(table, 1, kmax);
  for (std::size_t k : ks) m.worst = std::max(m.worst, vk0_ratio(table, k));
  m.designated = alpha_text(table) + " k=" + levels_text(ks);
  return m;
}

Measurement measure_b_transfer(const ConvergentTable& table, std::size_t k) {
  Measurement m;
  const std::uint64_t q = table.q_u64(k);
  for (std::uint64_t M : {q / 4, q / 2, 3 * q / 4, q - 1})
    for (int i = -9; i <= 9; ++i) m.worst = std::max(m.worst, b_transfer_ratio(table, k, M, i * 0.1));
  m.designated = alpha_text(table) + " k=" + std::to_string(k) + " M=q/4,q/2,3q/4,q-1 x=-0.9:0.9:0.1";
  return m;
}

std::vector<OstrowskiDigits> regular_sample(const ConvergentTable& table, std::size_t K,
                                            std::size_t count, std::uint64_t seed, double T) {
  std::mt19937_64 rng(seed);
  const double dT = default_delta_T(T);
  std::vector<OstrowskiDigits> out;
  for (std::size_t i = 0; i < count; ++i) {
    OstrowskiDigits d;
    d.b.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
      const std::uint64_t a = table.a_u64(k + 1);
      const std::uint64_t hi = k == 0 ? a - 1 : std::min(a - 1, b_double_star(a, dT));
      d.b[k] = rng() % (hi + 1);
    }
    out.push_back(d);
  }
  return out;
}

Measurement measure_ek(const ConvergentTable& table, const std::vector<OstrowskiDigits>& sample) {
  Measurement m;
  m.worst = -INFINITY;
  for (const OstrowskiDigits& d : sample)
    for (std::size_t k = 1; k < d.K(); ++k)
      if (d.b[k] >= 1) m.worst = std::max(m.worst, ek_ratio(table, d, k));
  m.designated = alpha_text(table) + " " + std::to_string(sample.size()) + " regular digit vectors";
  return m;
}

Measurement measure_pnun(const ConvergentTable& table, const std::vector<OstrowskiDigits>& sample) {
  Measurement m;
  for (const OstrowskiDigits& d : sample) m.worst = std::max(m.worst, std::abs(pnun_residual(table, d)));
  m.designated = alpha_text(table) + " " + std::to_string(sample.size()) + " regular digit vectors";
  return m;
}

Measurement measure_fig3(const ConvergentTable& table, std::size_t k, const std::vector<double>& grid,
                         std::uint64_t budget) {
  const std::uint64_t a = table.a_u64(1);
  const std::vector<double> emp = empirical_limit(table, k, grid, budget);
  Measurement m;
  for (std::size_t i = 0; i < grid.size(); ++i)
    m.worst = std::max(m.worst, std::abs(emp[i] - g_alpha(a, grid[i])));
  m.designated = alpha_text(table) + " k=" + std::to_string(k) + " grid of " + std::to_string(grid.size());
  return m;
}

Measurement measure_theorem1(const ConvergentTable& table, std::size_t K, double T,
                             unsigned parallelism) {
  std::vector<std::uint64_t> all(table.q_u64(K));
  for (std::uint64_t N = 0; N < all.size(); ++N) all[N] = N;
  Measurement m;
  const double shape = theorem1_shape(table, K);
  for (const PredictionReport& r : theorem1_check(table, K, T, all, 1.0, 1, parallelism))
    m.worst = std::max(m.worst, std::abs(r.observed - r.prediction) / shape);
  m.designated = alpha_text(table) + " K=" + std::to_string(K) + " all N < q_K";
  return m;
}

Measurement measure_theorem2(const ConvergentTable& table, std::size_t K,
                             const std::vector<double>& c_list, unsigned parallelism) {
  ScanOptions opts;
  opts.c_list = c_list;
  opts.parallelism = parallelism;
  opts.keep_values_limit = 0;
  const ScanResult sr = scan(table, K, opts);
  Measurement m;
  for (double c : c_list) {
    const PredictionReport r = lcnorm_prediction(table, K, c, 1.0, sr);
    m.worst = std::max(m.worst, std::abs(r.observed - r.prediction) / r.error_budget);
  }
  m.designated = alpha_text(table) + " K=" + std::to_string(K) + " c=" + fmt("%g", c_list.front()) +
                 ".." + fmt("%g", c_list.back());
  return m;
}

Measurement measure_theorem3(const ConvergentTable& table, std::size_t K) {
  const PredictionReport r = pnstar_prediction(table, K, 1.0);
  Measurement m;
  m.worst = std::abs(r.observed - r.prediction) / r.error_budget;
  m.designated = alpha_text(table) + " K=" + std::to_string(K);
  return m;
}

const std::vector<double>& theorem2_c_values() {
  static const std::vector<double> c = {0.05, 0.5, 1.0, 2.0, 8.0, 64.0};
  return c;
}

}  // namespace sudler::tools
