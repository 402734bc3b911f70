#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sudler/alpha_spec.hpp"
#include "sudler/theorems.hpp"
#include "sudler_tools/fixtures.hpp"

namespace sudler::tools {

struct SuiteOptions {
  std::optional<AlphaSpec> alpha;
  std::optional<std::size_t> K;
  double T = 1.0;
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
  unsigned precision_bits = 256;
  const Fixtures* fixtures = nullptr;
};

struct SuiteResult {
  std::string suite;
  std::string alpha;
  std::size_t K = 0;
  std::vector<PredictionReport> reports;
  std::vector<std::string> lines;  // human-readable summary
  bool pass = true;
};

const std::vector<std::string>& suite_names();
/// The alpha a suite runs on when none is given; empty for suites without one.
std::string default_suite_alpha(const std::string& suite);
bool suite_needs_fixtures(const std::string& suite);

/// Throws OutOfRange for an unknown suite, Fixture when a needed entry is absent.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts);

}  // namespace sudler::tools
