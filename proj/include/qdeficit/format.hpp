#pragma once

#include <string>

namespace qdeficit {

inline constexpr int kSignificantDigits = 12;

// "%.12g" rendering shared by CSV and JSON output.
std::string format_number(double v);

// v rounded to 12 significant digits, so JSON output carries the same
// digits as the CSV text.
double round_significant(double v);

// Fixed 3-decimal rendering for the human-readable table.
std::string format_fixed3(double v);

}  // namespace qdeficit
