#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropfit/error.hpp"

namespace tropfit::io {

/// Locale-independent decimal parse of the whole token.
inline bool parse_real(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

struct RawSamples {
  std::vector<double> xs;
  std::vector<double> ys;
};

/**
 * Two numeric columns separated by a comma. A first line that does not parse
 * as two numbers is taken as a header; any later unparsable line is an error.
 * LF and CRLF line endings are accepted; blank lines are skipped.
 */
inline RawSamples parse_samples_text(std::string_view text) {
  RawSamples out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first_content = true;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto comma = line.find(',');
    double x = 0, y = 0;
    const bool ok = comma != std::string_view::npos && line.find(',', comma + 1) == std::string_view::npos &&
                    parse_real(line.substr(0, comma), x) && parse_real(line.substr(comma + 1), y);
    if (!ok) {
      // A header is a first row with no numeric cell at all.
      double dummy = 0;
      const bool numeric_cell = comma != std::string_view::npos && (parse_real(line.substr(0, comma), dummy) ||
                                                                    parse_real(line.substr(comma + 1), dummy));
      if (first_content && !numeric_cell && comma != std::string_view::npos) {
        first_content = false;
        continue;
      }
      throw LineError(ErrorCode::MalformedRow, line_no, "expected two numeric columns, got '" + std::string(line) + "'");
    }
    first_content = false;
    out.xs.push_back(x);
    out.ys.push_back(y);
  }
  if (out.xs.empty()) throw Error(ErrorCode::EmptyFile, "no samples found");
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RawSamples parse_samples_file(const std::string& path) { return parse_samples_text(read_file(path)); }

}  // namespace tropfit::io
