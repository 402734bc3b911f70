#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sudler_tools/calibrate.hpp"
#include "sudler_tools/fixtures.hpp"
#include "sudler_tools/io.hpp"
#include "sudler_tools/suites.hpp"

using namespace sudler;
using namespace sudler::tools;

TEST_CASE("grid and list parsing") {
  std::vector<double> g = parse_grid("-1:1:0.5");
  CHECK(g == std::vector<double>{-1, -0.5, 0, 0.5, 1});
  CHECK(parse_grid("-1:1:0.005").size() == 401);
  for (const char* bad : {"1:0:0.1", "0:1", "0:1:0", "0:1:-1", "a:b:c", "0:1:0.1:2"}) {
    try {
      parse_grid(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Syntax);
    }
  }
  CHECK(parse_list("0.5,1,2,64") == std::vector<double>{0.5, 1, 2, 64});
  CHECK_THROWS_AS(parse_list("1,,2"), Error);
}

TEST_CASE("hex reals round-trip") {
  for (double v : {0.0, -1.5, 0.1, 1e-300, 2.029883212819307}) CHECK(json_real(real_json(v)) == v);
  CHECK(json_int(int_json(18446744073709551615ull)) == 18446744073709551615ull);
}

TEST_CASE("csv layout") {
  std::ostringstream os;
  csv_header(os, {"x", "y"});
  csv_row(os, {0.5, 0.1});
  CHECK(os.str() == "# sudler-csv schema_version=1\nx,y\n0.5,0.10000000000000001\n");
}

TEST_CASE("fixtures round-trip and lookup") {
  Fixtures f;
  f.entries.push_back({"vk_envelope", kPurePeriodOne, 0.2, 0.16, "a=15"});
  f.entries.push_back({"fig3_residual", "[0;(15)]", 0.0163, 0.013, "k=4"});
  const std::string text = dump_fixtures(f);
  CHECK(text.back() == '\n');
  Fixtures g = parse_fixtures(text);
  CHECK(dump_fixtures(g) == text);
  CHECK(g.lookup("vk_envelope", parse_alpha("[0;(50)]")).value == 0.2);
  CHECK(g.lookup("fig3_residual", parse_alpha("[0;(15)]")).value == 0.0163);
  CHECK_THROWS_AS(g.lookup("fig3_residual", parse_alpha("[0;(16)]")), Error);
  CHECK_THROWS_AS(g.lookup("vk_envelope", parse_alpha("[0;(2,50)]")), Error);
  CHECK(alpha_class_of(parse_alpha("golden")) == kPurePeriodOne);
  CHECK(alpha_class_of(parse_alpha("[0;(2,50)]")) == "[0;(2,50)]");
}

TEST_CASE("missing fixture file names the calibrate command") {
  try {
    load_fixtures("/nonexistent/calibration.json");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Fixture);
    CHECK(std::string(e.what()).find("sudler calibrate") != std::string::npos);
  }
}

TEST_CASE("checked-in fixtures parse and cover every suite") {
  Fixtures f = load_fixtures(SUDLER_FIXTURES);
  CHECK(f.schema_version == kSchemaVersion);
  CHECK(f.margin == 1.25);
  for (const auto& e : f.entries) {
    if (e.name != "argmax_distance") CHECK(e.value == widen(e.observed, f.margin));
  }
  for (const std::string& s : suite_names()) {
    if (suite_needs_fixtures(s)) CHECK_NOTHROW(f.lookup(s == "limits" ? "vk_envelope" : s, parse_alpha("[0;(30)]")));
  }
}

TEST_CASE("margin widening") {
  CHECK(widen(2.0, 1.25) == 2.5);
  CHECK(widen(-2.0, 1.25) == -1.6);
}
