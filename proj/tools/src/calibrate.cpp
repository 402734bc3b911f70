#include "sudler_tools/calibrate.hpp"

#include <algorithm>

#include "sudler/theorems.hpp"
#include "sudler_tools/io.hpp"
#include "sudler_tools/measure.hpp"

namespace sudler::tools {

double widen(double worst, double margin) { return worst >= 0.0 ? worst * margin : worst / margin; }

Fixtures calibrate(const CalibrationOptions& opts) {
  Fixtures f;
  f.precision_bits = opts.precision_bits;
  f.margin = opts.margin;
  auto note = [&](const std::string& s) {
    if (opts.progress) *opts.progress << "calibrate: " << s << std::endl;
  };
  auto add = [&](const std::string& name, const std::string& cls, double worst, const std::string& what,
                 bool widened = true) {
    FixtureEntry e;
    e.name = name;
    e.alpha_class = cls;
    e.observed = worst;
    e.value = widened ? widen(worst, opts.margin) : worst;
    e.designated = what;
    f.entries.push_back(e);
    note(name + " [" + cls + "] worst " + std::to_string(worst));
  };
  auto table = [&](std::uint64_t a) { return pure_table(a, 12, opts.precision_bits); };

  const ConvergentTable t15 = table(15);
  {
    Measurement m = measure_vk_envelope(t15, false, 4, 8);
    add("vk_envelope", kPurePeriodOne, m.worst, m.designated);
  }
  {
    Measurement m = measure_vk_envelope(t15, true, 4, 8);
    add("vk_star_envelope", kPurePeriodOne, m.worst, m.designated);
  }
  {
    Measurement m = measure_vk0(t15, 8);
    add("vk0_bound", kPurePeriodOne, m.worst, m.designated);
  }
  {
    Measurement m = measure_b_transfer(t15, 4);
    add("b_transfer", kPurePeriodOne, m.worst, m.designated);
  }
  {
    const ConvergentTable t20 = table(20);
    const auto sample = regular_sample(t20, 4, 200, kCalibrationSeed);
    Measurement e = measure_ek(t20, sample);
    add("ek_residual", render(t20.alpha), e.worst, e.designated);
    Measurement p = measure_pnun(t20, sample);
    add("pnun_band", render(t20.alpha), p.worst, p.designated);
  }
  {
    Measurement m = measure_fig3(t15, 4, parse_grid("-1:1:0.005"));
    add("fig3_residual", render(t15.alpha), m.worst, m.designated);
  }
  {
    double worst = 0.0;
    std::string what;
    for (std::uint64_t a : {8, 12}) {
      Measurement m = measure_theorem1(table(a), 3, 1.0, opts.parallelism);
      worst = std::max(worst, m.worst);
      what += (what.empty() ? "" : "; ") + m.designated;
    }
    add("theorem1", kPurePeriodOne, worst, what);
  }
  {
    double worst = 0.0;
    std::string what;
    for (std::uint64_t a : {20, 40}) {
      Measurement m = measure_theorem2(table(a), 3, theorem2_c_values(), opts.parallelism);
      worst = std::max(worst, m.worst);
      what += (what.empty() ? "" : "; ") + m.designated;
    }
    add("theorem2", kPurePeriodOne, worst, what);
  }
  {
    double worst = 0.0;
    std::string what;
    for (std::uint64_t a : {10, 20, 40, 50}) {
      Measurement m = measure_theorem3(table(a), 3);
      worst = std::max(worst, m.worst);
      what += (what.empty() ? "" : "; ") + m.designated;
    }
    add("theorem3", kPurePeriodOne, worst, what);
  }
  for (std::uint64_t a : {10, 20, 50}) {
    const ConvergentTable t = table(a);
    const double d = static_cast<double>(argmax_distance(t, 3, opts.parallelism));
    add("argmax_distance", render(t.alpha), d, render(t.alpha) + " K=3 scan maximizer", false);
  }
  {
    double worst = 0.0;
    for (std::uint64_t a = 1; a <= 60; ++a) worst = std::max(worst, dk_lower_gap(a));
    add("dk_lower_slack", kPurePeriodOne, worst, "a=1..60, all 0 <= b <= a");
  }
  return f;
}

}  // namespace sudler::tools
