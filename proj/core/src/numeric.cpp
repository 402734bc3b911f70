#include "sudler/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <mpfr.h>

namespace sudler {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::InvalidDigits: return "invalid-digits";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::RationalExhausted: return "rational-exhausted";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::NotPeriodic: return "not-periodic";
    case ErrorKind::Io: return "io";
    case ErrorKind::Fixture: return "fixture";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

unsigned PrecisionConfig::digits10() const {
  return static_cast<unsigned>(std::ceil(working_bits * 0.30102999566398120)) + 1;
}

void PrecisionConfig::validate() const {
  if (working_bits < 64)
    throw Error(ErrorKind::Precision, "working_bits must be at least 64");
  if (tail_depth < 1)
    throw Error(ErrorKind::Precision, "tail_depth must be positive");
}

PrecisionConfig default_precision_from_env() {
  PrecisionConfig cfg;
  if (const char* env = std::getenv("SUDLER_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 64 || v > 1 << 20)
      throw Error(ErrorKind::Precision,
                  std::string("bad SUDLER_PRECISION_BITS: ") + env);
    cfg.working_bits = static_cast<unsigned>(v);
  }
  return cfg;
}

namespace {

unsigned digits_for(unsigned bits) {
  PrecisionConfig c;
  c.working_bits = bits;
  return c.digits10();
}

}  // namespace

Real make_real(long value, unsigned bits) {
  Real r(0, digits_for(bits));
  mpfr_set_prec(r.backend().data(), bits);
  mpfr_set_si(r.backend().data(), value, MPFR_RNDN);
  return r;
}

Real make_real(const BigInt& value, unsigned bits) {
  Real r(0, digits_for(bits));
  mpfr_set_prec(r.backend().data(), bits);
  mpfr_set_z(r.backend().data(), value.backend().data(), MPFR_RNDN);
  return r;
}

Real make_real_double(double value, unsigned bits) {
  Real r(0, digits_for(bits));
  mpfr_set_prec(r.backend().data(), bits);
  mpfr_set_d(r.backend().data(), value, MPFR_RNDN);
  return r;
}

Real real_pi(unsigned bits) {
  Real r(0, digits_for(bits));
  mpfr_set_prec(r.backend().data(), bits);
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

unsigned bit_length(const BigInt& n) {
  if (n == 0) return 0;
  return static_cast<unsigned>(mpz_sizeinbase(n.backend().data(), 2));
}

std::uint64_t to_u64(const BigInt& n, const char* what) {
  if (n < 0 || bit_length(n) > 64)
    throw Error(ErrorKind::Budget, std::string(what) + " does not fit in 64 bits");
  return n.convert_to<std::uint64_t>();
}

std::string to_hex(const Real& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", x.backend().data());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string to_hex(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

Real real_from_hex(const std::string& text, unsigned bits) {
  Real r = make_real(0L, bits);
  char* end = nullptr;
  mpfr_strtofr(r.backend().data(), text.c_str(), &end, 0, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0')
    throw Error(ErrorKind::Syntax, "bad hex-float: " + text);
  return r;
}

double double_from_hex(const std::string& text) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw Error(ErrorKind::Syntax, "bad hex-float: " + text);
  return v;
}

}  // namespace sudler
