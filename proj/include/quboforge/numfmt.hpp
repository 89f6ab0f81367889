#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace qf {

/// Shortest decimal form that round-trips: integers print without a point,
/// everything else with the minimal digits needed to recover the double.
inline std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15)
    return std::to_string(static_cast<long long>(v));
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace qf
