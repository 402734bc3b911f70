#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace sudler::tools {

inline constexpr int kSchemaVersion = 1;

/// Reals travel as C99 hex-float strings, integers as decimal strings.
std::string real_json(double v);
double json_real(const nlohmann::json& j);
std::string int_json(std::uint64_t v);
std::uint64_t json_int(const nlohmann::json& j);

/// "lo:hi:step"; points lo + i*step while <= hi + step/2. Throws Syntax.
std::vector<double> parse_grid(const std::string& text);

/// "0.5,1,2" -> {0.5, 1, 2}. Throws Syntax.
std::vector<double> parse_list(const std::string& text);

/// Writes the schema line and a header row.
void csv_header(std::ostream& os, const std::vector<std::string>& columns);
void csv_row(std::ostream& os, const std::vector<double>& values);

/// Writes `text` to path, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace sudler::tools
