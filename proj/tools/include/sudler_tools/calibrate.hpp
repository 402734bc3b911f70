#pragma once

#include <ostream>

#include "sudler_tools/fixtures.hpp"

namespace sudler::tools {

struct CalibrationOptions {
  unsigned precision_bits = 256;
  unsigned parallelism = 1;
  double margin = 1.25;
  std::ostream* progress = nullptr;
};

/// Seed of the digit samples drawn during calibration; fixed so that two
/// runs produce identical files.
inline constexpr std::uint64_t kCalibrationSeed = 0x5eed;

/// Measures every designated residual and freezes margin * worst.
Fixtures calibrate(const CalibrationOptions& opts);

/// The margin applied to a worst observed value. Negative worst values
/// (one-sided bounds that held with room) are loosened toward zero.
double widen(double worst, double margin);

}  // namespace sudler::tools
