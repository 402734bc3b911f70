#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sudler/cotangent.hpp"
#include "sudler/limitfn.hpp"
#include "sudler/ostrowski.hpp"
#include "sudler/scan.hpp"
#include "sudler/sudler.hpp"
#include "sudler_tools/calibrate.hpp"
#include "sudler_tools/io.hpp"
#include "sudler_tools/suites.hpp"

using nlohmann::ordered_json;
namespace st = sudler::tools;

namespace {

struct Common {
  std::string alpha;
  std::size_t K = 0;
  unsigned bits = 0;
  unsigned parallelism = 1;
  std::string out;
  std::string format = "json";
};

sudler::PrecisionConfig precision(const Common& c) {
  sudler::PrecisionConfig cfg = sudler::default_precision_from_env();
  if (c.bits) cfg.working_bits = c.bits;
  cfg.validate();
  return cfg;
}

sudler::ConvergentTable table_of(const Common& c, std::size_t K_max) {
  sudler::AlphaSpec a = sudler::parse_alpha(c.alpha);
  if (a.is_rational()) {
    const std::size_t n = *a.finite_length();
    K_max = std::min(K_max, n == 0 ? 0 : n - 1);
  }
  return sudler::build_table(a, K_max, precision(c));
}

std::string digits_text(const sudler::OstrowskiDigits& d) {
  std::string s;
  for (std::size_t k = 0; k < d.K(); ++k) s += (k ? "," : "") + std::to_string(d.b[k]);
  return s;
}

ordered_json digits_json(const sudler::OstrowskiDigits& d) {
  ordered_json j = ordered_json::array();
  for (auto b : d.b) j.push_back(st::int_json(b));
  return j;
}

int cmd_cf(const Common& c) {
  const sudler::ConvergentTable t = table_of(c, c.K);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "# sudler-csv schema_version=" << st::kSchemaVersion << "\n";
    os << "k,a,p,q,theta,delta,eta\n";
    for (std::size_t k = 0; k <= t.K_max; ++k)
      os << k << "," << t.a[k] << "," << t.p[k] << "," << t.q[k] << "," << sudler::to_hex(t.theta[k]) << ","
         << sudler::to_hex(t.delta[k]) << "," << sudler::to_hex(t.eta[k]) << "\n";
    st::write_output(c.out, os.str());
    return 0;
  }
  ordered_json j;
  j["schema_version"] = st::kSchemaVersion;
  j["alpha"] = sudler::render(t.alpha);
  j["K_max"] = st::int_json(t.K_max);
  j["precision_bits"] = st::int_json(t.bits());
  j["alpha_value"] = sudler::to_hex(t.alpha_value);
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k <= t.K_max; ++k) {
    ordered_json r;
    r["k"] = st::int_json(k);
    r["a"] = t.a[k].str();
    r["p"] = t.p[k].str();
    r["q"] = t.q[k].str();
    r["theta"] = sudler::to_hex(t.theta[k]);
    r["delta"] = sudler::to_hex(t.delta[k]);
    r["eta"] = sudler::to_hex(t.eta[k]);
    rows.push_back(r);
  }
  j["convergents"] = rows;
  st::write_output(c.out, j.dump(2) + "\n");
  return 0;
}

int cmd_ostrowski(const Common& c, const std::string& N_text, const std::string& digits_in) {
  const sudler::ConvergentTable t = table_of(c, std::max<std::size_t>(c.K, 64));
  sudler::OstrowskiDigits d;
  sudler::BigInt N;
  if (!digits_in.empty()) {
    for (double v : st::parse_list(digits_in)) {
      if (v < 0 || v != std::floor(v)) throw sudler::Error(sudler::ErrorKind::Syntax, "digits must be non-negative integers");
      d.b.push_back(static_cast<std::uint64_t>(v));
    }
    N = sudler::decode(t, d);
  } else {
    try {
      N = sudler::BigInt(N_text);
    } catch (const std::exception&) {
      throw sudler::Error(sudler::ErrorKind::Syntax, "N must be a decimal integer, got '" + N_text + "'");
    }
    if (N < 0) throw sudler::Error(sudler::ErrorKind::OutOfRange, "N must be non-negative");
    d = sudler::encode(t, N, c.K ? std::optional<std::size_t>(c.K) : std::nullopt);
  }
  const sudler::EpsilonProfile eps = sudler::epsilon_profile(t, d);
  ordered_json j;
  j["schema_version"] = st::kSchemaVersion;
  j["alpha"] = sudler::render(t.alpha);
  j["N"] = N.str();
  j["digits"] = digits_json(d);
  ordered_json e = ordered_json::array();
  for (const auto& x : eps.eps) e.push_back(x ? ordered_json(sudler::to_hex(*x)) : ordered_json(nullptr));
  j["epsilon"] = e;
  if (d.K() > 0 && N < t.q.back()) j["log_P_N"] = st::real_json(sudler::log_sudler(t, N).log_value);
  st::write_output(c.out, j.dump(2) + "\n");
  return 0;
}

int cmd_scan(const Common& c, const std::string& c_list, std::size_t top_m) {
  const sudler::ConvergentTable t = table_of(c, c.K + 1);
  sudler::ScanOptions o;
  if (!c_list.empty()) o.c_list = st::parse_list(c_list);
  for (double x : o.c_list)
    if (!(x > 0)) throw sudler::Error(sudler::ErrorKind::Syntax, "c values must be positive");
  o.parallelism = c.parallelism;
  o.top_m = top_m;
  o.keep_values_limit = 0;
  const sudler::ScanResult r = sudler::scan(t, c.K, o);
  const sudler::OstrowskiDigits arg = sudler::encode(t, sudler::BigInt(static_cast<unsigned long long>(r.argmax_N)), c.K);
  ordered_json j;
  j["schema_version"] = st::kSchemaVersion;
  j["alpha"] = sudler::render(t.alpha);
  j["K"] = st::int_json(r.K);
  j["count"] = st::int_json(r.count);
  j["argmax_N"] = st::int_json(r.argmax_N);
  j["argmax_digits"] = digits_json(arg);
  j["n_star_digits"] = digits_json(sudler::n_star(t, c.K));
  j["max_log"] = st::real_json(r.max_log);
  ordered_json sums = ordered_json::array();
  for (const auto& s : r.sums) sums.push_back({{"c", st::real_json(s.c)}, {"log_sum", st::real_json(s.log_sum)}});
  j["sums"] = sums;
  ordered_json top = ordered_json::array();
  for (const auto& [n, v] : r.top) top.push_back({{"N", st::int_json(n)}, {"log_P", st::real_json(v)}});
  j["top"] = top;
  j["zero_count"] = st::int_json(r.zero_count);
  std::cerr << "argmax=" << r.argmax_N << " digits=(" << digits_text(arg) << ") log P=" << r.max_log << "\n";
  st::write_output(c.out, j.dump(2) + "\n");
  return 0;
}

int cmd_cotangent(const Common& c, std::size_t k, const std::string& grid, bool starred) {
  const std::vector<double> xs = st::parse_grid(grid);
  const sudler::ConvergentTable t = table_of(c, k + 1);
  const std::vector<double> v = sudler::v_k_grid(t, k, xs, starred);
  std::ostringstream os;
  st::csv_header(os, {"x", "direct", "main_term", "residual"});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double m = sudler::v_k_main_term(t, k, xs[i], starred);
    st::csv_row(os, {xs[i], v[i], m, v[i] - m});
  }
  st::write_output(c.out, os.str());
  return 0;
}

std::string limit_csv(const sudler::ConvergentTable& t, std::size_t k, const std::vector<double>& xs,
                      bool closed, std::uint64_t budget) {
  const std::vector<double> emp = sudler::empirical_limit(t, k, xs, budget);
  std::ostringstream os;
  std::vector<std::string> cols = {"x", "empirical"};
  if (closed) cols.push_back("closed_form");
  cols.push_back("two_sin");
  st::csv_header(os, cols);
  std::size_t r = 0;
  if (closed) r = sudler::residue_of_index(t.alpha, k);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> row = {xs[i], emp[i]};
    if (closed) row.push_back(sudler::g_alpha_r(t.alpha, r, xs[i]));
    row.push_back(std::abs(2.0 * std::sin(M_PI * xs[i])));
    st::csv_row(os, row);
  }
  return os.str();
}

int cmd_limitfn(const Common& c, std::size_t k, const std::string& grid, bool closed, std::uint64_t budget) {
  const std::vector<double> xs = st::parse_grid(grid);
  const sudler::ConvergentTable t = table_of(c, k + 1);
  st::write_output(c.out, limit_csv(t, k, xs, closed, budget));
  return 0;
}

int cmd_figures(const Common& c, const std::string& which, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::vector<double> xs = st::parse_grid("-1:1:0.005");
  const sudler::PrecisionConfig cfg = precision(c);
  auto want = [&](const char* f) { return which == "all" || which == f; };
  if (!want("fig1") && !want("fig2") && !want("fig3"))
    throw sudler::Error(sudler::ErrorKind::Syntax, "figure must be fig1, fig2, fig3 or all");
  if (want("fig1")) {
    std::vector<std::vector<double>> curves;
    for (int a : {5, 15, 50}) {
      auto t = sudler::build_table(sudler::parse_alpha("[0;(" + std::to_string(a) + ")]"), 6, cfg);
      curves.push_back(sudler::empirical_limit(t, 4, xs));
    }
    std::ostringstream os;
    st::csv_header(os, {"x", "a5", "a15", "a50", "two_sin"});
    for (std::size_t i = 0; i < xs.size(); ++i)
      st::csv_row(os, {xs[i], curves[0][i], curves[1][i], curves[2][i], std::abs(2.0 * std::sin(M_PI * xs[i]))});
    st::write_output(dir + "/fig1.csv", os.str());
  }
  if (want("fig2")) {
    auto t = sudler::build_table(sudler::parse_alpha("[0;(2,50)]"), 7, cfg);
    const auto k4 = sudler::empirical_limit(t, 4, xs);
    const auto k5 = sudler::empirical_limit(t, 5, xs);
    std::ostringstream os;
    st::csv_header(os, {"x", "k4", "k5", "two_sin"});
    for (std::size_t i = 0; i < xs.size(); ++i)
      st::csv_row(os, {xs[i], k4[i], k5[i], std::abs(2.0 * std::sin(M_PI * xs[i]))});
    st::write_output(dir + "/fig2.csv", os.str());
  }
  if (want("fig3")) {
    auto t = sudler::build_table(sudler::parse_alpha("[0;(15)]"), 6, cfg);
    const auto emp = sudler::empirical_limit(t, 4, xs);
    std::ostringstream os;
    st::csv_header(os, {"x", "empirical", "closed_form", "residual"});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double g = sudler::g_alpha(15, xs[i]);
      st::csv_row(os, {xs[i], emp[i], g, emp[i] - g});
    }
    st::write_output(dir + "/fig3.csv", os.str());
  }
  return 0;
}

ordered_json report_json(const sudler::PredictionReport& r) {
  ordered_json j;
  j["label"] = r.label;
  j["prediction"] = st::real_json(r.prediction);
  j["observed"] = st::real_json(r.observed);
  j["error_budget"] = st::real_json(r.error_budget);
  j["pass"] = r.pass;
  return j;
}

int cmd_verify(const Common& c, std::vector<std::string> suites, double T, const std::string& fixtures_path,
               std::uint64_t seed) {
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = st::suite_names();
  st::SuiteOptions o;
  if (!c.alpha.empty()) o.alpha = sudler::parse_alpha(c.alpha);
  if (c.K) o.K = c.K;
  o.T = T;
  o.seed = seed;
  o.parallelism = c.parallelism;
  o.precision_bits = precision(c).working_bits;
  std::optional<st::Fixtures> fx;
  bool need = false;
  for (const auto& s : suites) need = need || st::suite_needs_fixtures(s);
  if (need) {
    fx = st::load_fixtures(fixtures_path);
    o.fixtures = &*fx;
  }
  bool all = true;
  ordered_json out;
  out["schema_version"] = st::kSchemaVersion;
  ordered_json list = ordered_json::array();
  for (const auto& s : suites) {
    const st::SuiteResult r = st::run_suite(s, o);
    for (const auto& line : r.lines) std::cout << "[" << s << "] " << line << "\n";
    std::cout << "[" << s << "] " << (r.pass ? "PASS" : "FAIL") << "\n";
    all = all && r.pass;
    ordered_json j;
    j["suite"] = r.suite;
    j["alpha"] = r.alpha;
    j["K"] = st::int_json(r.K);
    j["pass"] = r.pass;
    ordered_json reps = ordered_json::array();
    for (const auto& rep : r.reports) reps.push_back(report_json(rep));
    j["reports"] = reps;
    list.push_back(j);
  }
  out["suites"] = list;
  out["pass"] = all;
  if (!c.out.empty()) st::write_output(c.out, out.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_calibrate(const Common& c, double margin) {
  st::CalibrationOptions o;
  o.precision_bits = precision(c).working_bits;
  o.parallelism = c.parallelism;
  o.margin = margin;
  o.progress = &std::cerr;
  st::write_output(c.out, st::dump_fixtures(st::calibrate(o)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sudler products, Ostrowski expansions, cotangent sums and limit functions"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--precision-bits", c.bits, "working precision (default: $SUDLER_PRECISION_BITS or 256)");
  app.add_option("--parallelism", c.parallelism, "worker threads")->check(CLI::Range(1u, 256u));

  auto alpha_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--alpha", c.alpha, "e.g. \"[0;(5)]\", golden, rule:linear");
    if (required) o->required();
  };

  auto* cf = app.add_subcommand("cf", "continued fraction data");
  alpha_opt(cf, true);
  cf->add_option("--K", c.K, "largest index")->required();
  cf->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  cf->add_option("--out", c.out);

  auto* os = app.add_subcommand("ostrowski", "Ostrowski expansion of N, or N from digits");
  std::string N_text, digits_in;
  alpha_opt(os, true);
  auto* n_opt = os->add_option("--N", N_text);
  auto* d_opt = os->add_option("--digits", digits_in, "b_0,b_1,...");
  n_opt->excludes(d_opt);
  os->add_option("--K", c.K);
  os->add_option("--out", c.out);

  auto* sc = app.add_subcommand("scan", "sweep P_N over 0 <= N < q_K");
  std::string c_list;
  std::size_t top_m = 32;
  alpha_opt(sc, true);
  sc->add_option("--K", c.K)->required();
  sc->add_option("--c", c_list, "comma-separated exponents");
  sc->add_option("--top", top_m);
  sc->add_option("--out", c.out);

  auto* ct = app.add_subcommand("cotangent", "V_k(x) on a grid");
  std::size_t k = 0;
  std::string grid;
  bool starred = false;
  alpha_opt(ct, true);
  ct->add_option("--k", k)->required();
  ct->add_option("--grid", grid, "lo:hi:step")->required();
  ct->add_flag("--starred", starred);
  ct->add_option("--out", c.out);

  auto* lf = app.add_subcommand("limitfn", "P_{q_k}(alpha, (-1)^k x / q_k) on a grid");
  bool closed = false;
  std::uint64_t budget = 10'000'000;
  alpha_opt(lf, true);
  lf->add_option("--k", k)->required();
  lf->add_option("--grid", grid, "lo:hi:step")->required();
  lf->add_flag("--closed-form", closed);
  lf->add_option("--budget", budget, "cap on q_k");
  lf->add_option("--out", c.out);

  auto* vf = app.add_subcommand("verify", "verification suites");
  std::vector<std::string> suites;
  double T = 1.0;
  std::string fixtures_path = "tests/fixtures/calibration.json";
  std::uint64_t seed = 1;
  vf->add_option("--suite", suites, "constants|decomp|theorem1|theorem2|theorem3|limits|all");
  alpha_opt(vf, false);
  vf->add_option("--K", c.K);
  vf->add_option("--T", T);
  vf->add_option("--fixtures", fixtures_path);
  vf->add_option("--seed", seed, "random sample selection");
  vf->add_option("--out", c.out);

  auto* fg = app.add_subcommand("figures", "CSV data for the three figures");
  std::string which = "all", dir = ".";
  fg->add_option("--which", which, "fig1|fig2|fig3|all");
  fg->add_option("--out-dir", dir);

  auto* cal = app.add_subcommand("calibrate", "measure and freeze the envelope constants");
  double margin = 1.25;
  cal->add_option("--out", c.out)->required();
  cal->add_option("--margin", margin);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (vf->parsed())
    for (const auto& s : suites)
      if (s != "all" && std::find(st::suite_names().begin(), st::suite_names().end(), s) == st::suite_names().end()) {
        std::cerr << "unknown suite '" << s << "'\n" << vf->help();
        return 2;
      }

  try {
    if (cf->parsed()) return cmd_cf(c);
    if (os->parsed()) {
      if (N_text.empty() && digits_in.empty()) {
        std::cerr << "ostrowski needs --N or --digits\n" << os->help();
        return 2;
      }
      return cmd_ostrowski(c, N_text, digits_in);
    }
    if (sc->parsed()) return cmd_scan(c, c_list, top_m);
    if (ct->parsed()) return cmd_cotangent(c, k, grid, starred);
    if (lf->parsed()) return cmd_limitfn(c, k, grid, closed, budget);
    if (vf->parsed()) return cmd_verify(c, suites, T, fixtures_path, seed);
    if (fg->parsed()) return cmd_figures(c, which, dir);
    if (cal->parsed()) return cmd_calibrate(c, margin);
  } catch (const sudler::Error& e) {
    std::cerr << "error (" << sudler::to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == sudler::ErrorKind::Syntax ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
