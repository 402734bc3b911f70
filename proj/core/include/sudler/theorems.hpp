#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sudler/convergents.hpp"
#include "sudler/ostrowski.hpp"
#include "sudler/scan.hpp"

namespace sudler {

/// A main-term prediction next to its brute-force counterpart. The budget is
/// an error-term shape times a calibrated constant, never a proven bound.
struct PredictionReport {
  std::string label;
  double prediction = 0.0;
  double observed = 0.0;
  double error_budget = 0.0;
  bool pass = false;
};

PredictionReport make_report(std::string label, double prediction, double observed, double budget);

/// pi sqrt(3) / 2, the curvature of the d_k penalty at b_k = b_k*.
double quadratic_constant();

/// 9 Vol(4_1) / (25 pi): the worst ratio d_k (a_{k+1} / (b_k - b_k*)^2).
double d_k_lower_constant();

enum class DkRegime { FormulaII, Quadratic, OutOfRegime };
const char* to_string(DkRegime r);

struct DkTerm {
  std::size_t k = 0;
  std::uint64_t b = 0;
  std::uint64_t b_star = 0;
  std::uint64_t a_next = 0;
  double main = 0.0;  // a_{k+1} int_{b/a}^{b*/a} log|2 sin(pi x)| dx
  double quad = 0.0;  // (pi sqrt 3 / 2) (b - b*)^2 / a_{k+1}
  DkRegime regime = DkRegime::FormulaII;
  double value() const { return regime == DkRegime::Quadratic ? quad : main; }
};

struct DkTerms {
  std::vector<DkTerm> terms;
  double total = 0.0;
  bool condition_holds = true;  // log a_k / a_{k+1} <= T for k0 <= k <= K
};

/// Per-digit penalties. Below k0 the quadratic term is used; above, the
/// integral, tagged out-of-regime when b_k > 0.99 a_{k+1}.
DkTerms d_k_terms(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t K,
                  double T, std::size_t k0 = 1);

/// log u_k(N); zero when b_k = 0. Needs 1 <= k and q_k within the cotangent cap.
double u_k_value(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k);

/// log U_N = sum_{k0 <= k < K} log u_k(N).
double U_N(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k0 = 1);

/// E_k(N): the block sum of the decomposition at level k minus the three
/// main terms of log u_k. Requires b_k >= 1.
double e_k_residual(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k);

/// Error shapes, each with a unit term standing in for the O_alpha(1) part.
double theorem1_shape(const ConvergentTable& table, std::size_t K);
double theorem2_shape(const ConvergentTable& table, std::size_t K, double c);
double theorem3_shape(const ConvergentTable& table, std::size_t K);

/// (V / 4 pi) sum a_k + (1/2) sum log a_k, k = 1..K.
double pnstar_main_term(const ConvergentTable& table, std::size_t K);

PredictionReport pnstar_prediction(const ConvergentTable& table, std::size_t K, double C_cal);

/// `scan_result` must hold the sum for c.
PredictionReport lcnorm_prediction(const ConvergentTable& table, std::size_t K, double c,
                                   double C_cal, const ScanResult& scan_result);

/// One report per N: observed log P_N - log P_N*, predicted -sum d_k.
std::vector<PredictionReport> theorem1_check(const ConvergentTable& table, std::size_t K,
                                             double T, const std::vector<std::uint64_t>& sample,
                                             double C_cal, std::size_t k0 = 1,
                                             unsigned parallelism = 1);

/// Least-squares slope s in a (log P_N - log P_N*) = -s j^2 + l j + c over
/// single-digit perturbations b_m = b_m* + j, 0 < |j| <= J.
double quadratic_law_slope(const ConvergentTable& table, std::size_t K, std::size_t m, int J);

/// max_k |b_k - b_k*| for the digits of the scan maximizer over [0, q_K).
std::uint64_t argmax_distance(const ConvergentTable& table, std::size_t K, unsigned parallelism = 1);

/// Normalized residuals. Each divides an observed error by the shape of the
/// corresponding O-term, so a calibrated constant bounds it.

/// max over xs of |V_k(x)/delta_k - (log(a_k/2pi) - psi(1+x))| (1-|x|) a_k / (T + log(a_{k-1} a_k)),
/// with psi(2+x) and (2-|x|) in the starred case.
double vk_envelope_ratio(const ConvergentTable& table, std::size_t k, const std::vector<double>& xs,
                         bool starred, double T = 1.0);

/// |V_k(0)| a_{k+1} / (1 + log max_{l <= k} a_l).
double vk0_ratio(const ConvergentTable& table, std::size_t k);

/// |B_{k,M}(x)| (1-|x|)^2 a_{k+1}^2.
double b_transfer_ratio(const ConvergentTable& table, std::size_t k, std::uint64_t M, double x);

/// E_k(N) a_{k+1} q_k.
double ek_ratio(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k);

/// log P_N - log U_N.
double pnun_residual(const ConvergentTable& table, const OstrowskiDigits& digits, std::size_t k0 = 1);

/// max over 0 <= b <= a of 0.2326 (b - b*)^2 / a - a int_{b/a}^{b*/a} log|2 sin(pi x)| dx,
/// the slack needed in the lower bound for the integral form of d_k.
double dk_lower_gap(std::uint64_t a);

}  // namespace sudler
