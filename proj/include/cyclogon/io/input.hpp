#pragma once

// Side lengths from the command line: separate numbers, one CSV field
// "a0,a1,a2,a3,a4", or a JSON array.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclogon/core/error.hpp"

namespace cyclogon::io {

inline double parse_number(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' || text.back() == '\n'))
    text.remove_suffix(1);
  double x = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
  return x;
}

inline std::vector<double> parse_csv_row(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<double> parse_json_array(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected a JSON array of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw Error(ErrorCode::Parse, "expected a JSON array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

/// Accepts any mix of plain numbers, CSV rows and JSON arrays.
inline std::vector<double> parse_sides(const std::vector<std::string>& args) {
  std::vector<double> out;
  for (const auto& a : args) {
    const auto first = a.find_first_not_of(" \t");
    std::vector<double> part;
    if (first != std::string::npos && a[first] == '[')
      part = parse_json_array(a);
    else
      part = parse_csv_row(a);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cyclogon::io
