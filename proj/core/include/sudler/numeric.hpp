#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace sudler {

using BigInt = boost::multiprecision::mpz_int;
using Real = boost::multiprecision::mpfr_float;

enum class ErrorKind {
  Syntax,
  InvalidDigits,
  OutOfRange,
  Precision,
  RationalExhausted,
  Budget,
  Pole,
  NotPeriodic,
  Io,
  Fixture,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers (the
/// CLI in particular) can map it onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct PrecisionConfig {
  unsigned working_bits = 256;
  unsigned tail_depth = 64;

  /// Decimal digits handed to boost's mpfr_float constructors.
  unsigned digits10() const;
  void validate() const;
};

/// Reads SUDLER_PRECISION_BITS, falling back to the 256-bit default.
PrecisionConfig default_precision_from_env();

Real make_real(long value, unsigned bits);
Real make_real(const BigInt& value, unsigned bits);
Real make_real_double(double value, unsigned bits);
Real real_pi(unsigned bits);

/// Number of significant bits of |n| (0 for n == 0).
unsigned bit_length(const BigInt& n);

/// Exactly representable uint64 view of a non-negative BigInt; throws Budget
/// when the value does not fit.
std::uint64_t to_u64(const BigInt& n, const char* what);

// Hex-float text round-trips bit-exactly through both directions.
std::string to_hex(const Real& x);
std::string to_hex(double x);
Real real_from_hex(const std::string& text, unsigned bits);
double double_from_hex(const std::string& text);

}  // namespace sudler
