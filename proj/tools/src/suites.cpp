#include "sudler_tools/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sudler/cotangent.hpp"
#include "sudler/limitfn.hpp"
#include "sudler/quadrature.hpp"
#include "sudler/scan.hpp"
#include "sudler/sudler.hpp"
#include "sudler_tools/io.hpp"
#include "sudler_tools/measure.hpp"

namespace sudler::tools {

namespace {

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void push(SuiteResult& r, const PredictionReport& rep, bool with_line = true) {
  r.reports.push_back(rep);
  r.pass = r.pass && rep.pass;
  if (with_line)
    r.lines.push_back(rep.label + ": observed " + fmt("%.10g", rep.observed) + ", expected " +
                      fmt("%.10g", rep.prediction) + " +- " + fmt("%.3g", rep.error_budget) + " " +
                      verdict(rep.pass));
}

// A one-sided check packaged as a report: passes when observed <= bound.
void push_upper(SuiteResult& res, const std::string& label, double observed, double bound) {
  PredictionReport r;
  r.label = label;
  r.observed = observed;
  r.prediction = bound;
  r.error_budget = 0.0;
  r.pass = observed <= bound;
  push(res, r, false);
  res.lines.push_back(label + ": " + fmt("%.10g", observed) + " <= " + fmt("%.10g", bound) + " " + verdict(r.pass));
}

ConvergentTable table_for(const SuiteOptions& o, std::size_t K_max) {
  if (!o.alpha) throw Error(ErrorKind::OutOfRange, "this suite needs --alpha");
  PrecisionConfig cfg;
  cfg.working_bits = o.precision_bits;
  if (o.alpha->is_rational()) {
    const std::size_t n = *o.alpha->finite_length();
    K_max = std::min(K_max, n == 0 ? 0 : n - 1);
  }
  return build_table(*o.alpha, K_max, cfg);
}

const Fixtures& need(const SuiteOptions& o) {
  if (!o.fixtures)
    throw Error(ErrorKind::Fixture, "no fixtures loaded; run `sudler calibrate` first");
  return *o.fixtures;
}

SuiteResult constants_suite() {
  SuiteResult r;
  r.suite = "constants";
  const double v = vol41();
  push(r, make_report("Vol(4_1)", 2.02988, v, 5e-6));
  push(r, make_report("9 Vol(4_1) / (25 pi)", 0.23260748, 9.0 * v / (25.0 * M_PI), 1e-8));
  push(r, make_report("Gamma(1/6) Gamma(5/6)", 2.0 * M_PI, std::tgamma(1.0 / 6.0) * std::tgamma(5.0 / 6.0), 1e-10));
  const auto num = bernoulli_b2_integrals();
  const auto closed = bernoulli_b2_closed_forms();
  push(r, make_report("int B2({x})/(x-5/6)^2", closed.first, num.first, 1e-6));
  push(r, make_report("int B2({x})/x^2", closed.second, num.second, 1e-6));
  const auto cm = concavity_minimum(1e-3);
  push(r, make_report("min (5/6-y)^-2 int_y^{5/6}", 9.0 * v / (25.0 * M_PI), cm.first, 1e-6));
  push(r, make_report("argmin of that ratio", 0.0, cm.second, 0.0));
  return r;
}

SuiteResult decomp_suite(const SuiteOptions& o) {
  const std::size_t K = o.K.value_or(5);
  const ConvergentTable t = table_for(o, K + 1);
  if (K > t.K_max) throw Error(ErrorKind::OutOfRange, "K beyond the convergent table");
  SuiteResult r;
  r.suite = "decomp";
  r.alpha = render(t.alpha);
  r.K = K;
  const std::uint64_t qK = t.q_u64(K);
  const std::uint64_t limit = std::min<std::uint64_t>(qK, 200'000);
  double worst = 0.0;
  std::uint64_t round_trip_failures = 0;
  for (std::uint64_t N = 0; N < limit; ++N) {
    const BigInt n(static_cast<unsigned long long>(N));
    const OstrowskiDigits d = encode(t, n, K);
    if (decode(t, d) != n) ++round_trip_failures;
    const double direct = log_sudler(t, n).log_value;
    worst = std::max(worst, std::abs(decompose(t, d).total - direct) / (1.0 + std::abs(direct)));
  }
  push_upper(r, "decomposition, N < " + std::to_string(limit) + ", worst relative gap", worst, 1e-9);
  push_upper(r, "encode/decode mismatches", static_cast<double>(round_trip_failures), 0.0);
  return r;
}

SuiteResult theorem1_suite(const SuiteOptions& o) {
  const Fixtures& fx = need(o);
  const std::size_t K = o.K.value_or(3);
  const ConvergentTable t = table_for(o, K + 2);
  SuiteResult r;
  r.suite = "theorem1";
  r.alpha = render(t.alpha);
  r.K = K;
  const double C = fx.lookup("theorem1", t.alpha).value;
  const std::uint64_t qK = t.q_u64(K);
  std::vector<std::uint64_t> sample;
  if (qK <= 20'000) {
    for (std::uint64_t N = 0; N < qK; ++N) sample.push_back(N);
  } else {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 2000; ++i) sample.push_back(rng() % qK);
  }
  const auto reps = theorem1_check(t, K, o.T, sample, C, 1, o.parallelism);
  double worst = 0.0;
  std::size_t fails = 0;
  for (const auto& rep : reps) {
    push(r, rep, false);
    worst = std::max(worst, std::abs(rep.observed - rep.prediction));
    if (!rep.pass) ++fails;
  }
  r.lines.push_back("theorem1: " + std::to_string(reps.size()) + " values of N, worst |observed - prediction| " +
                    fmt("%.6g", worst) + ", budget " + fmt("%.6g", C * theorem1_shape(t, K)) + ", " +
                    std::to_string(fails) + " outside " + verdict(fails == 0));

  const double slack = fx.lookup("dk_lower_slack", t.alpha).value;
  double gap = 0.0;
  for (std::uint64_t N : sample) {
    const DkTerms dk = d_k_terms(t, encode(t, BigInt(static_cast<unsigned long long>(N)), K), K, o.T);
    for (const DkTerm& term : dk.terms) {
      const double diff = static_cast<double>(term.b) - static_cast<double>(term.b_star);
      gap = std::max(gap, 0.2326 * diff * diff / static_cast<double>(term.a_next) - term.main);
    }
  }
  push_upper(r, "d_k lower bound 0.2326 (b-b*)^2/a - main", gap, slack);

  try {
    const FixtureEntry& e = fx.lookup("argmax_distance", render(t.alpha));
    push_upper(r, "argmax digit distance", static_cast<double>(argmax_distance(t, K, o.parallelism)), e.value);
  } catch (const Error&) {
    r.lines.push_back("argmax digit distance: no fixture for " + r.alpha + ", skipped");
  }
  return r;
}

SuiteResult theorem2_suite(const SuiteOptions& o) {
  const Fixtures& fx = need(o);
  const std::size_t K = o.K.value_or(3);
  const ConvergentTable t = table_for(o, K + 2);
  SuiteResult r;
  r.suite = "theorem2";
  r.alpha = render(t.alpha);
  r.K = K;
  const double C = fx.lookup("theorem2", t.alpha).value;
  ScanOptions so;
  so.c_list = theorem2_c_values();
  so.parallelism = o.parallelism;
  so.keep_values_limit = 0;
  const ScanResult sr = scan(t, K, so);
  for (double c : so.c_list) push(r, lcnorm_prediction(t, K, c, C, sr));
  const double top = sr.sums.back().log_sum / so.c_list.back();
  push_upper(r, "c=64 norm minus max", top - sr.max_log, std::log(static_cast<double>(sr.count)) / 64.0);
  push_upper(r, "max minus c=64 norm", sr.max_log - top, 0.0);
  double worst = -INFINITY;
  for (std::size_t i = 1; i < sr.sums.size(); ++i)
    worst = std::max(worst, sr.sums[i].log_sum / sr.sums[i].c - sr.sums[i - 1].log_sum / sr.sums[i - 1].c);
  push_upper(r, "norm increase between consecutive c", worst, 0.0);
  return r;
}

SuiteResult theorem3_suite(const SuiteOptions& o) {
  const Fixtures& fx = need(o);
  const std::size_t K = o.K.value_or(3);
  const ConvergentTable t = table_for(o, K + 2);
  SuiteResult r;
  r.suite = "theorem3";
  r.alpha = render(t.alpha);
  r.K = K;
  push(r, pnstar_prediction(t, K, fx.lookup("theorem3", t.alpha).value));
  return r;
}

SuiteResult limits_suite(const SuiteOptions& o) {
  if (!o.alpha || !o.alpha->is_periodic())
    throw Error(ErrorKind::NotPeriodic, "the limits suite needs a periodic --alpha");
  const Fixtures& fx = need(o);
  const ConvergentTable t = table_for(o, 24);
  SuiteResult r;
  r.suite = "limits";
  r.alpha = render(t.alpha);
  const std::size_t p = t.alpha.period.size();
  const std::size_t k0 = t.alpha.preperiod.size();
  for (std::size_t res = 1; res <= p; ++res) {
    const LimitConstants lc = limit_constants(t.alpha, res);
    std::size_t k = k0 + res;
    while (k + p <= t.K_max) k += p;
    push(r, make_report("C_" + std::to_string(res) + " vs q_k||q_k alpha|| at k=" + std::to_string(k), lc.C,
                        t.delta_d(k), 1e-9));
    push_upper(r, "violations of 0 < D < C < 1 for r=" + std::to_string(res),
               (lc.D > 0 && lc.D < lc.C && lc.C < 1) ? 0.0 : 1.0, 0.0);
  }
  if (alpha_class_of(t.alpha) == kPurePeriodOne) {
    Measurement m = measure_vk_envelope(t, false, 4, 8);
    push_upper(r, "V_k envelope ratio, " + m.designated, m.worst, fx.lookup("vk_envelope", t.alpha).value);
    Measurement s = measure_vk_envelope(t, true, 4, 8);
    push_upper(r, "V_k* envelope ratio, " + s.designated, s.worst, fx.lookup("vk_star_envelope", t.alpha).value);
  }
  try {
    const FixtureEntry& e = fx.lookup("fig3_residual", render(t.alpha));
    const Measurement m = measure_fig3(t, 4, parse_grid("-1:1:0.005"));
    push_upper(r, "empirical k=4 vs closed form, sup", m.worst, e.value);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Fixture) throw;
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"constants", "decomp", "theorem1", "theorem2", "theorem3", "limits"};
  return n;
}

bool suite_needs_fixtures(const std::string& suite) { return suite != "constants" && suite != "decomp"; }

std::string default_suite_alpha(const std::string& suite) {
  if (suite == "decomp") return "[0;(5)]";
  if (suite == "theorem1") return "[0;(10)]";
  if (suite == "theorem2" || suite == "theorem3") return "[0;(30)]";
  if (suite == "limits") return "[0;(15)]";
  return "";
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& given) {
  SuiteOptions opts = given;
  if (!opts.alpha && !default_suite_alpha(suite).empty()) opts.alpha = parse_alpha(default_suite_alpha(suite));
  if (suite == "constants") return constants_suite();
  if (suite == "decomp") return decomp_suite(opts);
  if (suite == "theorem1") return theorem1_suite(opts);
  if (suite == "theorem2") return theorem2_suite(opts);
  if (suite == "theorem3") return theorem3_suite(opts);
  if (suite == "limits") return limits_suite(opts);
  throw Error(ErrorKind::OutOfRange, "unknown suite '" + suite + "'");
}

}  // namespace sudler::tools
