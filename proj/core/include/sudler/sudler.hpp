#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sudler/convergents.hpp"
#include "sudler/ostrowski.hpp"
#include "sudler/phase.hpp"

namespace sudler {

enum class Method { Direct, Decomposed, RationalClosedForm };
const char* to_string(Method m);

/// log of prod |2 sin(pi (n alpha + x))|. `zero` marks a product containing
/// an exactly vanishing factor; log_value is meaningless then.
struct LogProduct {
  double log_value = 0.0;
  std::uint64_t n_terms = 0;
  Method method = Method::Direct;
  bool zero = false;
};

/// log P_N(alpha).
LogProduct log_sudler(const ConvergentTable& table, const BigInt& N);

/// log P_M(alpha, sign * x).
LogProduct log_sudler_shifted(const ConvergentTable& table, std::uint64_t M, double x,
                              int sign = 1);
/// Same with the shift given directly as a phase.
LogProduct log_sudler_shifted_phase(const ConvergentTable& table, std::uint64_t M,
                                    Phase shift);

/// log P_N(p/q, x), factor by factor. Requires gcd(p, q) = 1, 0 <= N < q and
/// q < 2^53.
LogProduct log_sudler_rational(std::int64_t p, std::int64_t q, std::uint64_t N, double x);

/// log P_{q-1}(p/q, x) = log(|sin(pi q x)| / |sin(pi x)|), or log q for
/// integer x. Independent of p.
LogProduct log_sudler_rational_closed_form(std::int64_t q, double x);

struct DecompositionFactor {
  std::size_t k = 0;
  std::uint64_t b = 0;
  double shift = 0.0;  // b delta_k + eps_k, in (-1, 1)
  double log_value = 0.0;
};

struct Decomposition {
  std::vector<DecompositionFactor> factors;
  double total = 0.0;
};

/// log P_N(alpha) as a sum over the blocks of the Ostrowski expansion of N:
/// block (k, b) is P_{q_k}(alpha, (-1)^k (b delta_k + eps_k) / q_k).
Decomposition decompose(const ConvergentTable& table, const OstrowskiDigits& digits);

/// Difference between log P_M(alpha, .) and log P_M(p_k/q_k, .) at the shift
/// (-1)^k x / q_k, minus the first-order cotangent correction up to M.
double b_transfer(const ConvergentTable& table, std::size_t k, std::uint64_t M, double x);

/// Kahan-Babuska (Neumaier) running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace sudler
