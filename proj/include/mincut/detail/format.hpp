#pragma once

#include <charconv>
#include <string>

namespace mincut::detail {

// Shortest round-trip decimal form; integral values print without a point.
inline std::string format_number(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace mincut::detail
