#pragma once

// Monogamy of integer powers of the deficit:
//   delta_n = D_{A:BC}^n - D_AB^n - D_AC^n
// The state is monogamous at power n when delta_n >= -tol.

#include <optional>
#include <span>
#include <vector>

#include "qdeficit/deficit.hpp"

namespace qdeficit {

inline constexpr int kDefaultPowerLimit = 64;
inline constexpr double kDefaultMonogamyTolerance = 1e-12;

struct PowerScanRow {
  int n = 0;
  double q_pair_n = 0.0;     // D_AB^n
  double q_pair_ac_n = 0.0;  // D_AC^n
  double q_bipart_n = 0.0;   // D_{A:BC}^n
  double delta_n = 0.0;
};

struct ResidualTangle {
  std::optional<int> r;         // smallest monogamous power
  std::optional<double> tau_q;  // delta_r
};

std::vector<PowerScanRow> power_scan(const DeficitReport& report, int n_max);

ResidualTangle min_monogamy_power(const DeficitReport& report, int n_max = kDefaultPowerLimit,
                                  double tol = kDefaultMonogamyTolerance);

struct ThetaGrid {
  double start = 0.02;
  double stop = 3.141592653589793;
  double step = 0.02;
};

// start, start + step, ... up to stop; stop itself is appended when the
// stepping does not land on it. Every point must lie in (0, pi].
std::vector<double> make_theta_grid(const ThetaGrid& grid);

struct ThetaSweepRow {
  double theta = 0.0;
  int n = 0;
  double d_pair_n = 0.0;
  double d_bipart_n = 0.0;
  double delta_n = 0.0;
};

struct ThetaPoint {
  double theta = 0.0;
  DeficitReport report;
  ResidualTangle tangle;
};

struct ThetaSweep {
  std::vector<ThetaSweepRow> rows;  // grid-major, n_set order within each theta
  std::vector<ThetaPoint> points;   // one per grid entry
};

// delta_n(theta) for the family cos(theta/2)|000> + sin(theta/2)|W>.
// n_max bounds the per-point minimal-power search.
ThetaSweep theta_sweep(std::span<const double> theta_grid, std::span<const int> n_set,
                       LogBase base, int n_max = kDefaultPowerLimit);

}  // namespace qdeficit
