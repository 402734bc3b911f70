#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sudler/numeric.hpp"

namespace sudler {

/// Continued fraction description of a real number [a0; a1, a2, ...].
///
/// Exactly one of three shapes: finite (a rational), eventually periodic
/// (a quadratic irrational), or rule-generated.
struct AlphaSpec {
  BigInt integer_part = 0;
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;
  std::string rule;

  bool is_rational() const { return period.empty() && rule.empty(); }
  bool is_periodic() const { return !period.empty(); }
  bool has_rule() const { return !rule.empty(); }

  /// a_k for k >= 1. Throws RationalExhausted past the end of a finite spec.
  BigInt partial_quotient(std::size_t k) const;

  /// Number of quotients after a0 for a finite spec.
  std::optional<std::size_t> finite_length() const;
};

/// Accepted forms: "[a0;a1,...,an]", "[a0;a1,...,an,(b1,...,bm)]",
/// "golden", "sqrt2", "rule:powers-of-two", "rule:linear".
AlphaSpec parse_alpha(std::string_view text);
std::string render(const AlphaSpec& alpha);

std::vector<std::string> known_rules();

bool operator==(const AlphaSpec& x, const AlphaSpec& y);

}  // namespace sudler
