#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qdeficit/errors.hpp"
#include "qdeficit/monogamy.hpp"

using namespace qdeficit;

TEST_CASE("power scan of W against the published table") {
  const auto rows = power_scan(deficit_report(NamedState::W, LogBase::nats), 5);
  REQUIRE(rows.size() == 5);
  const double delta[5] = {-0.287, -0.022, 0.060, 0.072, 0.062};
  const double pair[5] = {0.462, 0.213, 0.098, 0.045, 0.021};
  const double bip[5] = {0.636, 0.405, 0.257, 0.164, 0.104};
  for (int k = 0; k < 5; ++k) {
    CAPTURE(k);
    CHECK(rows[k].n == k + 1);
    CHECK(std::abs(rows[k].delta_n - delta[k]) <= 0.002);
    CHECK(std::abs(rows[k].q_pair_n - pair[k]) <= 0.002);
    CHECK(std::abs(rows[k].q_bipart_n - bip[k]) <= 0.002);
    CHECK(std::abs(rows[k].delta_n - (rows[k].q_bipart_n - 2.0 * rows[k].q_pair_n)) <= 1e-12);
  }
}

TEST_CASE("power scan of WWBAR against the published table") {
  const auto rows = power_scan(deficit_report(NamedState::WWBAR, LogBase::nats), 5);
  const double delta[5] = {-0.322, -0.095, -0.023, -0.003, 0.0013};
  for (int k = 0; k < 5; ++k) CHECK(std::abs(rows[k].delta_n - delta[k]) <= 0.002);
}

TEST_CASE("product state scan is identically zero") {
  RawAmplitudes raw{};
  raw.amplitudes[0] = 1.0;
  for (const auto& row : power_scan(deficit_report(raw, LogBase::nats), 10)) CHECK(row.delta_n == 0.0);
}

TEST_CASE("power scan rejects n_max < 1") {
  CHECK_THROWS_AS(power_scan(deficit_report(NamedState::W, LogBase::nats), 0), InvalidArgument);
}

TEST_CASE("minimal monogamous powers") {
  const auto w = min_monogamy_power(deficit_report(NamedState::W, LogBase::nats));
  REQUIRE(w.r.has_value());
  CHECK(*w.r == 3);
  CHECK(std::abs(*w.tau_q - 0.060) <= 0.002);

  const auto ww = min_monogamy_power(deficit_report(NamedState::WWBAR, LogBase::nats));
  REQUIRE(ww.r.has_value());
  CHECK(*ww.r == 5);
  CHECK(std::abs(*ww.tau_q - 0.0013) <= 0.0005);

  const auto ghz = min_monogamy_power(deficit_report(NamedState::GHZ, LogBase::bits));
  REQUIRE(ghz.r.has_value());
  CHECK(*ghz.r == 1);
  CHECK(std::abs(*ghz.tau_q - 1.0) <= 1e-9);
}

TEST_CASE("no monogamous power within the limit") {
  DeficitReport r;
  r.d_AB = r.d_AC = 0.5;
  r.d_A_BC = 0.5;  // delta_n = -0.5^n: negative for every n, but within 1e-12 from n = 40
  const auto t = min_monogamy_power(r, 64, 0.0);
  CHECK_FALSE(t.r.has_value());
  CHECK_FALSE(t.tau_q.has_value());
  CHECK(min_monogamy_power(r, 64).r == 40);
  // WWBAR needs five powers, so a limit of four finds nothing.
  CHECK_FALSE(min_monogamy_power(deficit_report(NamedState::WWBAR, LogBase::nats), 4).r);
}

TEST_CASE("theta grid construction") {
  const auto g = make_theta_grid({});
  CHECK(g.front() == doctest::Approx(0.02));
  CHECK(g.back() == std::numbers::pi);
  CHECK(g.size() == 158);
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);

  const auto exact = make_theta_grid({0.5, 1.5, 0.25});
  CHECK(exact.size() == 5);
  CHECK(exact.back() == doctest::Approx(1.5));

  CHECK_THROWS_AS(make_theta_grid({0.0, 1.0, 0.1}), InvalidArgument);
  CHECK_THROWS_AS(make_theta_grid({0.1, 1.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(make_theta_grid({0.1, 4.0, 0.1}), InvalidArgument);
}

TEST_CASE("theta sweep: W endpoint, polygamy at n = 1, large minimal powers") {
  const auto grid = make_theta_grid({0.1, std::numbers::pi, 0.02});
  const std::vector<int> n_set{1, 3};
  const ThetaSweep sweep = theta_sweep(grid, n_set, LogBase::nats);
  REQUIRE(sweep.rows.size() == grid.size() * 2);
  REQUIRE(sweep.points.size() == grid.size());

  const auto& last = sweep.rows[sweep.rows.size() - 1];
  CHECK(last.theta == std::numbers::pi);
  CHECK(last.n == 3);
  CHECK(std::abs(last.delta_n - 0.060) <= 0.002);

  int max_r = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(sweep.rows[2 * k].delta_n < 0.0);
    if (sweep.points[k].tangle.r) max_r = std::max(max_r, *sweep.points[k].tangle.r);
  }
  CHECK(max_r >= 10);
}

TEST_CASE("theta sweep continuity and scan monotonicity") {
  const auto grid = make_theta_grid({0.1, std::numbers::pi, 0.01});
  std::vector<int> n_set;
  for (int n = 1; n <= 10; ++n) n_set.push_back(n);
  const ThetaSweep sweep = theta_sweep(grid, n_set, LogBase::nats);
  for (std::size_t k = 1; k < grid.size(); ++k)
    for (std::size_t j = 0; j < n_set.size(); ++j)
      CHECK(std::abs(sweep.rows[k * 10 + j].delta_n - sweep.rows[(k - 1) * 10 + j].delta_n) <= 0.05);

  for (const ThetaPoint& p : sweep.points) {
    const DeficitReport& r = p.report;
    if (r.d_AB > r.d_A_BC || r.d_AC > r.d_A_BC) continue;
    bool satisfied = false;
    for (const PowerScanRow& row : power_scan(r, 64)) {
      if (satisfied) CHECK(row.delta_n >= -1e-12);
      satisfied = satisfied || row.delta_n >= 0.0;
    }
    if (p.tangle.tau_q) CHECK(*p.tangle.tau_q >= 0.0);
  }
}

TEST_CASE("theta sweep input checks") {
  const std::vector<int> n_set{1};
  CHECK_THROWS_AS(theta_sweep(std::vector<double>{}, n_set, LogBase::nats), InvalidArgument);
  CHECK_THROWS_AS(theta_sweep(std::vector<double>{0.0}, n_set, LogBase::nats), InvalidArgument);
  CHECK_THROWS_AS(theta_sweep(std::vector<double>{1.0}, std::vector<int>{0}, LogBase::nats),
                  InvalidArgument);
}
