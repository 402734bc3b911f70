#include "sudler/surd.hpp"

#include <mpfr.h>

namespace sudler {


Surd periodic_surd(const std::vector<BigInt>& period) {
  if (period.empty()) throw Error(ErrorKind::NotPeriodic, "empty period");
  // [[P, P'], [Q, Q']] = prod [[c, 1], [1, 0]]
  BigInt P = 1, Pp = 0, Q = 0, Qp = 1;
  for (const auto& c : period) {
    BigInt nP = P * c + Pp;
    BigInt nQ = Q * c + Qp;
    Pp = P;
    Qp = Q;
    P = nP;
    Q = nQ;
  }
  // x = (P x + P') / (Q x + Q')  =>  Q x^2 + (Q' - P) x - P' = 0
  Surd s;
  s.u = P - Qp;
  s.d = s.u * s.u + 4 * Q * Pp;
  s.v = 2 * Q;
  if (s.v <= 0) throw Error(ErrorKind::Internal, "periodic surd with non-positive denominator");
  return s;
}

Surd surd_prepend(const BigInt& a, const Surd& x) {
  BigInt w = (x.d - x.u * x.u) / x.v;
  Surd s{a * w - x.u, x.d, w};
  if (s.v < 0) throw Error(ErrorKind::Internal, "surd prepend produced negative denominator");
  return s;
}

BigInt surd_floor(const Surd& x) {
  BigInt r = boost::multiprecision::sqrt(x.d);
  // floor((u + sqrt d)/v) for v > 0 equals floor((u + floor(sqrt d))/v)
  BigInt num = x.u + r;
  BigInt q = num / x.v;
  if (num < 0 && q * x.v != num) q -= 1;
  return q;
}

Surd surd_tail(const Surd& x) {
  BigInt a = surd_floor(x);
  // x - a = (u - a v + sqrt d)/v ; invert.
  Surd frac{x.u - a * x.v, x.d, x.v};
  BigInt w = (frac.d - frac.u * frac.u) / frac.v;
  Surd s{-frac.u, frac.d, w};
  if (s.v < 0) throw Error(ErrorKind::Internal, "surd tail produced negative denominator");
  return s;
}

Surd surd_conjugate(const Surd& x) { return Surd{-x.u, x.d, -x.v}; }

Real surd_to_real(const Surd& x, unsigned bits) {
  const unsigned guard = bits + 64 + bit_length(x.d);
  Real root = make_real(x.d, guard);
  mpfr_sqrt(root.backend().data(), root.backend().data(), MPFR_RNDN);
  Real num = make_real(0L, guard);
  Real uu = make_real(x.u, guard);
  if (x.u >= 0) {
    num = uu + root;
  } else {
    // u + sqrt(d) = (d - u^2)/(sqrt(d) - u)
    Real diff = make_real(BigInt(x.d - x.u * x.u), guard);
    num = diff / (root - uu);
  }
  Real out = num / make_real(x.v, guard);
  Real rounded = make_real(0L, bits);
  mpfr_set(rounded.backend().data(), out.backend().data(), MPFR_RNDN);
  return rounded;
}

}  // namespace sudler
