#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sudler/convergents.hpp"

namespace sudler {

struct ScanOptions {
  std::vector<double> c_list;
  unsigned parallelism = 1;
  std::uint64_t budget = 10'000'000;
  std::size_t top_m = 32;
  /// Keep log P_N for every N when q_K does not exceed this.
  std::uint64_t keep_values_limit = std::uint64_t(1) << 24;
};

struct ScanSum {
  double c = 0.0;
  double log_sum = 0.0;  // log sum_{N < q_K} P_N^c
};

/// Sweep of P_N(alpha) over 0 <= N < q_K.
struct ScanResult {
  std::size_t K = 0;
  std::uint64_t count = 0;  // q_K
  std::uint64_t argmax_N = 0;
  double max_log = 0.0;
  std::vector<ScanSum> sums;
  std::vector<std::pair<std::uint64_t, double>> top;  // by value, then by N
  std::vector<double> values;  // log P_N, empty when over keep_values_limit
  std::uint64_t zero_count = 0;
};

/// Work is cut into fixed chunks whose boundaries do not depend on the number
/// of threads, and all partial results are merged in chunk order, so every
/// bit of the result is independent of `parallelism`.
ScanResult scan(const ConvergentTable& table, std::size_t K, const ScanOptions& opts);

}  // namespace sudler
