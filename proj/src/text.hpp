#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wap/error.hpp"

namespace wap::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(s.substr(start));
      return fields;
    }
    fields.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::int64_t parse_int(std::string_view field, std::string_view context) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    fail(ErrorCode::Parse, "malformed integer '" + std::string(field) + "' in " + std::string(context));
  return value;
}

/// Comma-separated integers; the empty (or blank) string is the empty list.
inline std::vector<std::int64_t> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<std::int64_t> values;
  if (trim(text).empty()) return values;
  for (auto field : split(text, ',')) values.push_back(parse_int(field, context));
  return values;
}

template <typename Range>
std::string join_ints(const Range& values, char sep = ',') {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace wap::detail
