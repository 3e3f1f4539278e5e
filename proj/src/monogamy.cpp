#include "qdeficit/monogamy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qdeficit/errors.hpp"

namespace qdeficit {

namespace {

PowerScanRow scan_row(const DeficitReport& report, int n) {
  PowerScanRow row;
  row.n = n;
  row.q_pair_n = std::pow(report.d_AB, n);
  row.q_pair_ac_n = std::pow(report.d_AC, n);
  row.q_bipart_n = std::pow(report.d_A_BC, n);
  row.delta_n = row.q_bipart_n - row.q_pair_n - row.q_pair_ac_n;
  return row;
}

void require_power_limit(int n_max) {
  if (n_max < 1) throw InvalidArgument("power limit must be at least 1");
}

}  // namespace

std::vector<PowerScanRow> power_scan(const DeficitReport& report, int n_max) {
  require_power_limit(n_max);
  std::vector<PowerScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows.push_back(scan_row(report, n));
  return rows;
}

ResidualTangle min_monogamy_power(const DeficitReport& report, int n_max, double tol) {
  require_power_limit(n_max);
  if (!(tol >= 0.0)) throw InvalidArgument("monogamy tolerance must be non-negative");
  for (int n = 1; n <= n_max; ++n) {
    const PowerScanRow row = scan_row(report, n);
    if (row.delta_n >= -tol) return {n, std::max(0.0, row.delta_n)};
  }
  return {};
}

std::vector<double> make_theta_grid(const ThetaGrid& grid) {
  if (!(grid.step > 0.0)) throw InvalidArgument("theta step must be positive");
  if (!(grid.start > 0.0 && grid.stop <= std::numbers::pi && grid.start <= grid.stop)) {
    std::ostringstream msg;
    msg << "theta range [" << grid.start << ", " << grid.stop << "] must lie in (0, pi]";
    throw InvalidArgument(msg.str());
  }
  constexpr double kLanding = 1e-9;
  std::vector<double> out;
  for (long k = 0;; ++k) {
    const double theta = grid.start + static_cast<double>(k) * grid.step;
    if (theta > grid.stop + kLanding) break;
    out.push_back(std::min(theta, grid.stop));
  }
  if (grid.stop - out.back() > kLanding) out.push_back(grid.stop);
  return out;
}

ThetaSweep theta_sweep(std::span<const double> theta_grid, std::span<const int> n_set,
                       LogBase base, int n_max) {
  if (theta_grid.empty()) throw InvalidArgument("theta grid is empty");
  if (n_set.empty()) throw InvalidArgument("power set is empty");
  for (int n : n_set)
    if (n < 1) throw InvalidArgument("powers must be positive");

  ThetaSweep sweep;
  sweep.points.reserve(theta_grid.size());
  sweep.rows.reserve(theta_grid.size() * n_set.size());
  for (double theta : theta_grid) {
    ThetaPoint point;
    point.theta = theta;
    point.report = deficit_report(theta_state(theta), base, ThetaState{theta});
    point.tangle = min_monogamy_power(point.report, n_max);
    for (int n : n_set) {
      const PowerScanRow r = scan_row(point.report, n);
      sweep.rows.push_back({theta, n, r.q_pair_n, r.q_bipart_n, r.delta_n});
    }
    sweep.points.push_back(std::move(point));
  }
  return sweep;
}

}  // namespace qdeficit
