#pragma once

#include <cstdint>
#include <vector>

#include "sudler/convergents.hpp"

namespace sudler {

enum class CotangentKind { C_k, V_k, V_k_star };
const char* to_string(CotangentKind kind);

struct CotangentSumValue {
  double value = 0.0;
  std::size_t k = 0;
  double x = 0.0;
  CotangentKind kind = CotangentKind::V_k;
};

/// Direct-summation cap for the q_k-term sums.
inline constexpr std::uint64_t kCotangentBudget = 10'000'000;

/// sum_{n=1}^{q-1} (n/q) cot(pi (n p + sign x) / q).
double vasyunin(std::int64_t p, std::int64_t q, double x, int parity_sign = 1);

/// C_k(x): the Vasyunin sum at p_k/q_k with sign (-1)^k.
CotangentSumValue c_k(const ConvergentTable& table, std::size_t k, double x);

/// V_k(x) = sum_{n=1}^{q_k-1} sin(pi n theta_k / q_k) cot(pi (n (-1)^k p_k + x) / q_k).
CotangentSumValue v_k(const ConvergentTable& table, std::size_t k, double x);

/// V_k without the two terms n = q_{k-1} and n = q_k - q_{k-1}, whose poles
/// sit at x = 1 and x = -1.
CotangentSumValue v_k_star(const ConvergentTable& table, std::size_t k, double x);

/// V_k (or V_k*) at many shifts in one O(q_k * grid) pass.
std::vector<double> v_k_grid(const ConvergentTable& table, std::size_t k,
                             const std::vector<double>& xs, bool starred = false);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// delta_k (log(a_k / 2 pi) - psi(1 + x)), or psi(2 + x) when starred.
double v_k_main_term(const ConvergentTable& table, std::size_t k, double x, bool starred = false);

}  // namespace sudler
