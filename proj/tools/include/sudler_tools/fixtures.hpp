#pragma once

#include <string>
#include <vector>

#include "sudler/alpha_spec.hpp"

namespace sudler::tools {

/// Class label shared by every alpha = [0; (a)].
inline constexpr const char* kPurePeriodOne = "pure-period-1";

struct FixtureEntry {
  std::string name;         // which residual, e.g. "vk_envelope"
  std::string alpha_class;  // a rendered alpha, or a class label
  double value = 0.0;       // the frozen constant or bound
  double observed = 0.0;    // worst value seen during calibration
  std::string designated;   // what was measured to obtain it
};

struct Fixtures {
  int schema_version = 1;
  unsigned precision_bits = 256;
  double margin = 1.25;
  std::vector<FixtureEntry> entries;

  /// Exact alpha match first, then its class. Throws Fixture when absent.
  const FixtureEntry& lookup(const std::string& name, const AlphaSpec& alpha) const;
  const FixtureEntry& lookup(const std::string& name, const std::string& alpha_class) const;
};

std::string alpha_class_of(const AlphaSpec& alpha);

/// Deterministic text: fixed key order, hex floats, trailing newline.
std::string dump_fixtures(const Fixtures& f);
Fixtures parse_fixtures(const std::string& text);

/// Throws Fixture, naming the calibrate command, when the file is missing.
Fixtures load_fixtures(const std::string& path);

}  // namespace sudler::tools
