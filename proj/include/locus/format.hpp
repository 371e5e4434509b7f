#pragma once

#include <charconv>
#include <string>

namespace locus {

/// 12 significant digits, '.' separator, no locale, negative zero printed
/// as 0.
inline std::string format_number(double v, int precision = 12) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

}  // namespace locus
