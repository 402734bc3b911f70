#pragma once

#include <cmath>
#include <cstdint>

#include "sudler/numeric.hpp"

namespace sudler {

/// Point of the circle R/Z in units of 2^-128. Addition wraps exactly.
using Phase = unsigned __int128;

inline double phase_to_double(Phase ph) {
  return std::ldexp(static_cast<double>(ph), -128);
}

/// ||ph||, distance to the nearest integer, in [0, 1/2].
inline double phase_distance(Phase ph) {
  Phase neg = -ph;
  return phase_to_double(ph < neg ? ph : neg);
}

Phase phase_of_double(double x);
Phase phase_of_real(const Real& x);
/// floor(((r mod q)/q) * 2^128) for q > 0.
Phase phase_of_rational(const BigInt& r, const BigInt& q);

/// Running product of |2 sin(pi t)| factors kept as mantissa * 2^exponent so
/// that millions of factors neither overflow nor underflow.
struct ProductState {
  double mant = 1.0;
  std::int64_t exp2 = 0;
  bool zero = false;

  void mul(double f) {
    if (f == 0.0) {
      zero = true;
      return;
    }
    mant *= f;
    if (mant < 0x1p-500 || mant > 0x1p500) normalize();
  }
  void normalize() {
    int e = 0;
    mant = std::frexp(mant, &e);
    exp2 += e;
  }
  void mul(const ProductState& other) {
    zero = zero || other.zero;
    mant *= other.mant;
    exp2 += other.exp2;
    normalize();
  }
  double log_value() const {
    return static_cast<double>(exp2) * 0.69314718055994530942 + std::log(mant);
  }
};

inline double two_sin_pi(double d) { return 2.0 * std::sin(M_PI * d); }

/// Multiplies |2 sin(pi (start + n step))| for n = 1..count into `state`.
void accumulate_phases(ProductState& state, Phase start, Phase step, std::uint64_t count);

}  // namespace sudler
