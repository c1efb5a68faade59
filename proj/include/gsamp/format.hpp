#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace gsamp {

// Stable textual form for numeric values in records and reports:
// integral values print without a decimal point, everything else with
// %.12g. Same bytes for the same value on every run.
inline std::string format_number(double value) {
  if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace gsamp
