#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <string>

namespace tropfit::io {

/// 17 significant digits: enough to round-trip any double.
inline std::string format_exact(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf.data(), ptr);
}

inline std::string format_general(double v, int digits) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits);
  (void)ec;
  return std::string(buf.data(), ptr);
}

/// Fixed four decimals, used for human-facing summaries.
inline std::string format_display(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 4);
  (void)ec;
  return std::string(buf.data(), ptr);
}

}  // namespace tropfit::io
