#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace bohr {

// Fixed-point text with `precision` decimals. glibc printf rounds the exact
// binary value half-to-even, which is the rounding used for every report.
inline std::string fixed(double value, int precision) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  std::string out(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') {
    out.erase(0, 1);
  }
  return out;
}

// Short scientific form for diagnostics.
inline std::string sci(double value, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, value);
  return buf;
}

}  // namespace bohr
