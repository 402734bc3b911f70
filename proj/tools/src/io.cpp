#include "sudler_tools/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sudler/numeric.hpp"

namespace sudler::tools {

std::string real_json(double v) { return to_hex(v); }

double json_real(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  return double_from_hex(j.get<std::string>());
}

std::string int_json(std::uint64_t v) { return std::to_string(v); }

std::uint64_t json_int(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  return std::stoull(j.get<std::string>());
}

namespace {

double parse_number(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Syntax, "not a number: '" + s + "' in '" + whole + "'");
  }
  if (used != s.size() || !std::isfinite(v))
    throw Error(ErrorKind::Syntax, "not a number: '" + s + "' in '" + whole + "'");
  return v;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw Error(ErrorKind::Syntax, "grid must look like lo:hi:step, got '" + text + "'");
  const double lo = parse_number(text.substr(0, c1), text);
  const double hi = parse_number(text.substr(c1 + 1, c2 - c1 - 1), text);
  const double step = parse_number(text.substr(c2 + 1), text);
  if (!(step > 0.0)) throw Error(ErrorKind::Syntax, "grid step must be positive in '" + text + "'");
  if (hi < lo) throw Error(ErrorKind::Syntax, "grid upper end below lower end in '" + text + "'");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    if (x > hi + step / 2) break;
    out.push_back(x);
  }
  return out;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, text));
  if (out.empty()) throw Error(ErrorKind::Syntax, "empty list");
  return out;
}

void csv_header(std::ostream& os, const std::vector<std::string>& columns) {
  os << "# sudler-csv schema_version=" << kSchemaVersion << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
}

void csv_row(std::ostream& os, const std::vector<double>& values) {
  char buf[40];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    os << (i ? "," : "") << buf;
  }
  os << "\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path);
}

}  // namespace sudler::tools
