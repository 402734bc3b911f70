#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sudler/convergents.hpp"

namespace sudler {

/// N = sum_k b[k] q_k, least significant digit first.
struct OstrowskiDigits {
  std::vector<std::uint64_t> b;
  std::size_t K() const { return b.size(); }
};

/// eps[k] is set only where b_k >= 1.
struct EpsilonProfile {
  std::vector<std::optional<Real>> eps;
};

/// Describes the first digit rule broken, or nullopt for a valid expansion.
std::optional<std::string> digit_violation(const ConvergentTable& table,
                                           const OstrowskiDigits& digits);

/// Greedy expansion. K defaults to the smallest index with q_K > N; a larger
/// K pads with zeros.
OstrowskiDigits encode(const ConvergentTable& table, const BigInt& N,
                       std::optional<std::size_t> K = std::nullopt);
BigInt decode(const ConvergentTable& table, const OstrowskiDigits& digits);

/// b_k* = floor(5 a_{k+1} / 6), k = 0..K-1.
OstrowskiDigits n_star(const ConvergentTable& table, std::size_t K);

std::uint64_t b_double_star(std::uint64_t a_next, double delta_T);
double default_delta_T(double T);

EpsilonProfile epsilon_profile(const ConvergentTable& table, const OstrowskiDigits& digits);

/// Replaces digit m by B. Throws InvalidDigits if the result breaks the
/// carry rule instead of repairing it.
OstrowskiDigits project(const ConvergentTable& table, const OstrowskiDigits& digits,
                        std::size_t m, std::uint64_t B, std::size_t k0 = 1);

/// {n alpha} from the digits of n: the integer parts b_k p_k drop out and only
/// the signed corrections (-1)^k b_k ||q_k alpha|| remain.
Real frac_part_ostrowski(const ConvergentTable& table, const BigInt& n);

namespace detail {

template <class F>
void enumerate_digits(const ConvergentTable& table, OstrowskiDigits& d, std::size_t k,
                      bool force_zero, F& f) {
  const std::uint64_t a = table.a_u64(k + 1);
  const std::uint64_t hi = force_zero ? 0 : (k == 0 ? a - 1 : a);
  for (std::uint64_t v = 0; v <= hi; ++v) {
    d.b[k] = v;
    if (k == 0) {
      f(static_cast<const OstrowskiDigits&>(d));
    } else {
      enumerate_digits(table, d, k - 1, v == a, f);
    }
  }
}

}  // namespace detail

/// Calls f(digits) for every valid digit vector of length K.
template <class F>
void for_each_valid_digits(const ConvergentTable& table, std::size_t K, F&& f) {
  OstrowskiDigits d;
  d.b.assign(K, 0);
  if (K == 0) {
    f(static_cast<const OstrowskiDigits&>(d));
    return;
  }
  detail::enumerate_digits(table, d, K - 1, false, f);
}

}  // namespace sudler
