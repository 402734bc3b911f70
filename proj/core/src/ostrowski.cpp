#include "sudler/ostrowski.hpp"

#include <cmath>

#include <mpfr.h>

namespace sudler {

std::optional<std::string> digit_violation(const ConvergentTable& table,
                                           const OstrowskiDigits& digits) {
  const std::size_t K = digits.K();
  if (K > table.K_max + 1)
    return "digit vector longer than the convergent table (K=" + std::to_string(K) + ")";
  for (std::size_t k = 0; k < K; ++k) {
    const BigInt& a = table.a[k + 1];
    const BigInt b = digits.b[k];
    if (k == 0 && b >= a) return "b_0 must be below a_1";
    if (b > a) return "b_" + std::to_string(k) + " exceeds a_" + std::to_string(k + 1);
    if (k >= 1 && b == a && digits.b[k - 1] != 0)
      return "b_" + std::to_string(k) + " = a_" + std::to_string(k + 1) + " requires b_" +
             std::to_string(k - 1) + " = 0";
  }
  return std::nullopt;
}

OstrowskiDigits encode(const ConvergentTable& table, const BigInt& N,
                       std::optional<std::size_t> K) {
  if (N < 0) throw Error(ErrorKind::OutOfRange, "N must be non-negative");
  if (N >= table.q.back())
    throw Error(ErrorKind::OutOfRange, "N exceeds the range of the convergent table");
  std::size_t need = N == 0 ? 0 : index_covering(table, N);
  std::size_t len = K.value_or(need);
  if (len < need)
    throw Error(ErrorKind::OutOfRange, "N does not fit in " + std::to_string(len) + " digits");
  OstrowskiDigits d;
  d.b.assign(len, 0);
  BigInt rem = N;
  for (std::size_t k = need; k-- > 0;) {
    BigInt bk = rem / table.q[k];
    rem -= bk * table.q[k];
    d.b[k] = bk.convert_to<std::uint64_t>();
  }
  if (auto bad = digit_violation(table, d))
    throw Error(ErrorKind::Internal, "greedy expansion produced invalid digits: " + *bad);
  return d;
}

BigInt decode(const ConvergentTable& table, const OstrowskiDigits& digits) {
  if (auto bad = digit_violation(table, digits)) throw Error(ErrorKind::InvalidDigits, *bad);
  BigInt n = 0;
  for (std::size_t k = 0; k < digits.K(); ++k)
    n += BigInt(static_cast<unsigned long long>(digits.b[k])) * table.q[k];
  return n;
}

OstrowskiDigits n_star(const ConvergentTable& table, std::size_t K) {
  if (K > table.K_max + 1) throw Error(ErrorKind::OutOfRange, "K beyond the convergent table");
  OstrowskiDigits d;
  for (std::size_t k = 0; k < K; ++k) {
    BigInt b = table.a[k + 1] * 5 / 6;
    d.b.push_back(b.convert_to<std::uint64_t>());
  }
  return d;
}

std::uint64_t b_double_star(std::uint64_t a_next, double delta_T) {
  if (a_next == 2) return 0;
  return static_cast<std::uint64_t>(std::floor((1.0 - delta_T) * static_cast<double>(a_next)));
}

double default_delta_T(double T) {
  return std::min(1.0 / (4.0 * M_PI * std::exp(2.0 * T)), 0.01);
}

EpsilonProfile epsilon_profile(const ConvergentTable& table, const OstrowskiDigits& digits) {
  if (auto bad = digit_violation(table, digits)) throw Error(ErrorKind::InvalidDigits, *bad);
  const std::size_t K = digits.K();
  const unsigned wb = table.bits();
  EpsilonProfile out;
  out.eps.resize(K);
  // suffix = sum_{l > k} (-1)^l b_l theta_l
  Real suffix = make_real(0L, wb);
  for (std::size_t k = K; k-- > 0;) {
    if (digits.b[k] >= 1) {
      Real e = suffix * make_real(table.q[k], wb);
      if (k % 2 == 1) e = -e;
      out.eps[k] = e;
    }
    Real term = table.theta[k] * make_real(static_cast<long>(digits.b[k]), wb);
    if (k % 2 == 1) {
      suffix -= term;
    } else {
      suffix += term;
    }
  }
  return out;
}

OstrowskiDigits project(const ConvergentTable& table, const OstrowskiDigits& digits,
                        std::size_t m, std::uint64_t B, std::size_t k0) {
  if (m < k0 || m >= digits.K())
    throw Error(ErrorKind::OutOfRange, "projection index outside [k0, K-1]");
  if (BigInt(static_cast<unsigned long long>(B)) > table.a[m + 1])
    throw Error(ErrorKind::OutOfRange, "projection digit exceeds a_{m+1}");
  OstrowskiDigits out = digits;
  out.b[m] = B;
  if (auto bad = digit_violation(table, out))
    throw Error(ErrorKind::InvalidDigits, "projection produced invalid digits: " + *bad);
  return out;
}

Real frac_part_ostrowski(const ConvergentTable& table, const BigInt& n) {
  OstrowskiDigits d = encode(table, n);
  const unsigned wb = table.bits();
  Real s = make_real(0L, wb);
  for (std::size_t k = 0; k < d.K(); ++k) {
    Real term = table.theta[k] * make_real(static_cast<long>(d.b[k]), wb);
    if (k % 2 == 1) {
      s -= term;
    } else {
      s += term;
    }
  }
  // integer part of n*a0 + sum b_k p_k is discarded
  Real fl = s;
  mpfr_floor(fl.backend().data(), s.backend().data());
  return s - fl;
}

}  // namespace sudler
