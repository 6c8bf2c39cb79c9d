#pragma once

#include <charconv>
#include <string>

namespace qresb {

/// Locale-independent "%.Ng"-equivalent rendering of a double.
inline std::string fmt_g(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

/// Rounds v to the value its 12-significant-digit decimal form parses back
/// to, so a number emitted at that precision re-reads as exactly itself.
inline double round_through_12(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

}  // namespace qresb
