#include "sudler/phase.hpp"

#include <mpfr.h>

namespace sudler {

namespace {

Phase phase_from_bigint(const BigInt& v) {
  Phase out = 0;
  for (int limb = 3; limb >= 0; --limb) {
    BigInt part = (v >> (32 * limb)) & BigInt(0xffffffffu);
    out = (out << 32) | part.convert_to<std::uint32_t>();
  }
  return out;
}

}  // namespace

Phase phase_of_double(double x) {
  if (x < 0) return -phase_of_double(-x);
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;
  // f < 1 has at most 53 significant bits; scale in two exact steps.
  double hi = std::floor(std::ldexp(f, 64));
  double lo = std::ldexp(f, 64) - hi;
  Phase ph = static_cast<Phase>(static_cast<std::uint64_t>(hi)) << 64;
  ph += static_cast<Phase>(static_cast<std::uint64_t>(std::ldexp(lo, 64)));
  return ph;
}

Phase phase_of_real(const Real& x) {
  const unsigned bits = std::max<unsigned>(mpfr_get_prec(x.backend().data()), 192);
  Real f = make_real(0L, bits);
  mpfr_frac(f.backend().data(), x.backend().data(), MPFR_RNDN);
  if (f < 0) f += 1;
  mpfr_mul_2ui(f.backend().data(), f.backend().data(), 128, MPFR_RNDN);
  BigInt v = 0;
  mpfr_get_z(v.backend().data(), f.backend().data(), MPFR_RNDD);
  return phase_from_bigint(v);
}

Phase phase_of_rational(const BigInt& r, const BigInt& q) {
  BigInt m = r % q;
  if (m < 0) m += q;
  BigInt scaled = (m << 128) / q;
  return phase_from_bigint(scaled);
}

void accumulate_phases(ProductState& state, Phase start, Phase step, std::uint64_t count) {
  Phase ph = start;
  for (std::uint64_t n = 0; n < count; ++n) {
    ph += step;
    state.mul(two_sin_pi(phase_distance(ph)));
    if (state.zero) return;
  }
}

}  // namespace sudler
