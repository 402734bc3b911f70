#pragma once

#include <vector>

#include "sudler/numeric.hpp"

namespace sudler {

/// Exact quadratic surd (u + sqrt(d)) / v with d > 0 not a perfect square,
/// v != 0 and v | d - u^2.
struct Surd {
  BigInt u, d, v;
};

/// Fixed point x = [c1; c2, ..., cp, x] of a purely periodic continued fraction.
Surd periodic_surd(const std::vector<BigInt>& period);

/// a + 1/x.
Surd surd_prepend(const BigInt& a, const Surd& x);

BigInt surd_floor(const Surd& x);

/// 1/(x - floor(x)).
Surd surd_tail(const Surd& x);

/// Galois conjugate (u - sqrt(d)) / v.
Surd surd_conjugate(const Surd& x);

/// Rounded once to `bits` significant bits; internal guard bits absorb the
/// square root and the division.
Real surd_to_real(const Surd& x, unsigned bits);

}  // namespace sudler
