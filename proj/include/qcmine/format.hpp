#pragma once

#include <cstdio>
#include <string>

namespace qcmine {

/// Ratios in exported artifacts are rendered with 6 significant digits so
/// that repeated runs diff clean.
inline std::string format_sig6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

/// Rounds through the %.6g decimal representation; used before handing
/// ratios to the JSON writer.
inline double sig6(double x) {
  return std::strtod(format_sig6(x).c_str(), nullptr);
}

}  // namespace qcmine
