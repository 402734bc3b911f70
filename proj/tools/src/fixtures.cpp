#include "sudler_tools/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "sudler/numeric.hpp"
#include "sudler_tools/io.hpp"

namespace sudler::tools {

using nlohmann::ordered_json;

std::string alpha_class_of(const AlphaSpec& alpha) {
  // products only see {alpha}, so the integer part does not matter
  if (alpha.preperiod.empty() && alpha.period.size() == 1)
    return kPurePeriodOne;
  return render(alpha);
}

const FixtureEntry& Fixtures::lookup(const std::string& name, const std::string& alpha_class) const {
  for (const FixtureEntry& e : entries)
    if (e.name == name && e.alpha_class == alpha_class) return e;
  throw Error(ErrorKind::Fixture, "no fixture '" + name + "' for " + alpha_class +
                                      "; run `sudler calibrate` to regenerate the fixtures");
}

const FixtureEntry& Fixtures::lookup(const std::string& name, const AlphaSpec& alpha) const {
  const std::string exact = render(alpha);
  for (const FixtureEntry& e : entries)
    if (e.name == name && e.alpha_class == exact) return e;
  return lookup(name, alpha_class_of(alpha));
}

std::string dump_fixtures(const Fixtures& f) {
  ordered_json j;
  j["schema_version"] = f.schema_version;
  j["precision_bits"] = int_json(f.precision_bits);
  j["margin"] = real_json(f.margin);
  ordered_json list = ordered_json::array();
  for (const FixtureEntry& e : f.entries) {
    ordered_json x;
    x["name"] = e.name;
    x["alpha_class"] = e.alpha_class;
    x["value"] = to_hex(e.value);
    x["observed"] = to_hex(e.observed);
    x["designated"] = e.designated;
    list.push_back(x);
  }
  j["entries"] = list;
  return j.dump(2) + "\n";
}

Fixtures parse_fixtures(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Fixture, std::string("fixtures are not valid JSON: ") + e.what());
  }
  Fixtures f;
  try {
    f.schema_version = j.at("schema_version").get<int>();
    if (f.schema_version != kSchemaVersion)
      throw Error(ErrorKind::Fixture, "fixtures schema_version " + std::to_string(f.schema_version) +
                                          " is not supported; run `sudler calibrate`");
    f.precision_bits = static_cast<unsigned>(json_int(j.at("precision_bits")));
    f.margin = json_real(j.at("margin"));
    for (const auto& x : j.at("entries")) {
      FixtureEntry e;
      e.name = x.at("name").get<std::string>();
      e.alpha_class = x.at("alpha_class").get<std::string>();
      e.value = json_real(x.at("value"));
      e.observed = json_real(x.at("observed"));
      e.designated = x.value("designated", "");
      f.entries.push_back(e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Fixture, std::string("malformed fixtures: ") + e.what());
  }
  return f;
}

Fixtures load_fixtures(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Fixture, "fixtures file " + path +
                                        " not found; run `sudler calibrate --out " + path + "` first");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

}  // namespace sudler::tools
