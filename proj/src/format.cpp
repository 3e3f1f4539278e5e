#include "qdeficit/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace qdeficit {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v == 0.0 ? 0.0 : v);
  return buf;
}

double round_significant(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string format_fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace qdeficit
