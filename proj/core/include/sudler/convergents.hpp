#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sudler/alpha_spec.hpp"
#include "sudler/numeric.hpp"

namespace sudler {

/// Convergent data of alpha for indices 0..K_max.
///
/// a, p, q run one step further (to K_max + 1) because delta_k and eta_k
/// involve a_{k+1} and q_{k+1}.
struct ConvergentTable {
  AlphaSpec alpha;
  PrecisionConfig cfg;
  std::size_t K_max = 0;

  std::vector<BigInt> a;
  std::vector<BigInt> p;
  std::vector<BigInt> q;

  std::vector<Real> theta;  // ||q_k alpha||
  std::vector<Real> delta;  // q_k ||q_k alpha||
  std::vector<Real> eta;    // q_k ||q_{k+1} alpha||

  Real alpha_value;

  /// floor({alpha} * 2^128); the fixed-point increment used by the product
  /// kernels, computed at 256+ bits independent of working_bits.
  unsigned __int128 phase = 0;

  std::uint64_t a_u64(std::size_t k) const;
  std::uint64_t q_u64(std::size_t k) const;
  double delta_d(std::size_t k) const { return delta.at(k).convert_to<double>(); }
  double theta_d(std::size_t k) const { return theta.at(k).convert_to<double>(); }
  double eta_d(std::size_t k) const { return eta.at(k).convert_to<double>(); }
  unsigned bits() const { return cfg.working_bits; }
};

ConvergentTable build_table(const AlphaSpec& alpha, std::size_t K_max,
                            const PrecisionConfig& cfg = PrecisionConfig{});

/// Smallest K <= table.K_max + 1 with q_K > n (so that 0 <= n < q_K).
std::size_t index_covering(const ConvergentTable& table, const BigInt& n);

/// {n alpha} by direct multiplication at working precision.
Real frac_part(const ConvergentTable& table, const BigInt& n);

}  // namespace sudler
