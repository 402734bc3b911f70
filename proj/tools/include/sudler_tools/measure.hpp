#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sudler/convergents.hpp"
#include "sudler/ostrowski.hpp"
#include "sudler/theorems.hpp"

namespace sudler::tools {

/// Worst normalized residual over a designated set, with a description of it.
struct Measurement {
  double worst = 0.0;
  std::string designated;
};

/// Cap on q_k for every direct q_k-term summation.
inline constexpr std::uint64_t kDirectCap = 10'000'000;

ConvergentTable pure_table(std::uint64_t a, std::size_t K_max = 12, unsigned bits = 256);

/// Levels k in [kmin, kmax] with q_k <= cap.
std::vector<std::size_t> levels_within_cap(const ConvergentTable& table, std::size_t kmin,
                                           std::size_t kmax, std::uint64_t cap = kDirectCap);

std::vector<double> envelope_grid(bool starred);

Measurement measure_vk_envelope(const ConvergentTable& table, bool starred, std::size_t kmin,
                                std::size_t kmax);
Measurement measure_vk0(const ConvergentTable& table, std::size_t kmax);
Measurement measure_b_transfer(const ConvergentTable& table, std::size_t k);

/// Random digit vectors with b_k <= b_k** for k >= 1, so that the F_k
/// correction vanishes.
std::vector<OstrowskiDigits> regular_sample(const ConvergentTable& table, std::size_t K,
                                            std::size_t count, std::uint64_t seed, double T = 1.0);

Measurement measure_ek(const ConvergentTable& table, const std::vector<OstrowskiDigits>& sample);
Measurement measure_pnun(const ConvergentTable& table, const std::vector<OstrowskiDigits>& sample);

/// sup over the grid of |P_{q_k}(alpha, (-1)^k x / q_k) - G(x)| for [0; (a)].
Measurement measure_fig3(const ConvergentTable& table, std::size_t k, const std::vector<double>& grid,
                         std::uint64_t budget = kDirectCap);

/// Worst |observed - prediction| / shape.
Measurement measure_theorem1(const ConvergentTable& table, std::size_t K, double T,
                             unsigned parallelism = 1);
Measurement measure_theorem2(const ConvergentTable& table, std::size_t K,
                             const std::vector<double>& c_list, unsigned parallelism = 1);
Measurement measure_theorem3(const ConvergentTable& table, std::size_t K);

/// The c values exercised for the norm theorem.
const std::vector<double>& theorem2_c_values();

}  // namespace sudler::tools
