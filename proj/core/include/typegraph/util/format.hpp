#pragma once

#include <array>
#include <charconv>
#include <string>

namespace typegraph::util {

/// Shortest text that round-trips to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

/// Fixed notation with `digits` decimals.
inline std::string format_fixed(double v, int digits) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
  return std::string(buf.data(), ptr);
}

}  // namespace typegraph::util
