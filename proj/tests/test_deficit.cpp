#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qdeficit/deficit.hpp"
#include "qdeficit/errors.hpp"
#include "test_support.hpp"

using namespace qdeficit;

namespace {

std::vector<double> sorted_nonzero(std::vector<double> p) {
  std::vector<double> out;
  for (double v : p)
    if (v > 1e-12) out.push_back(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// -sum p ln p, independent of the library helpers.
double shannon_nats(std::initializer_list<double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

}  // namespace

TEST_CASE("decohere_pair: W gives (1/3, 1/3, 1/3, 0)") {
  const MarginalSet m = marginals(build_state(NamedState::W));
  const auto d = decohere_pair(m.rho_AB, m.rho_A, m.rho_B);
  const double t = 1.0 / 3.0;
  const std::vector<double> expected{t, t, t, 0.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(d.probabilities[i] - expected[i]) <= 1e-14);
}

TEST_CASE("decohere_pair: WWBAR gives (3/4, 1/12, 1/12, 1/12)") {
  const MarginalSet m = marginals(build_state(NamedState::WWBAR));
  const auto d = decohere_pair(m.rho_AB, m.rho_A, m.rho_B);
  const std::vector<double> expected{0.75, 1.0 / 12, 1.0 / 12, 1.0 / 12};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(d.probabilities[i] - expected[i]) <= 1e-14);
}

TEST_CASE("decohere_pair leaves an already-decohered diagonal state alone") {
  // Product of diag(0.7, 0.3) and diag(0.6, 0.4): non-degenerate diagonal marginals.
  const std::vector<double> d{0.42, 0.28, 0.18, 0.12};
  const auto rho = DensityMatrix::from_matrix(ComplexMatrix::diagonal(d));
  const auto left = partial_trace(rho, {0});
  const auto right = partial_trace(rho, {1});
  const auto out = decohere_pair(rho, left, right);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(out.probabilities[i] - d[i]) <= 1e-15);
}

TEST_CASE("decohere_pair rejects inconsistent marginals") {
  const MarginalSet m = marginals(build_state(NamedState::W));
  const MarginalSet other = marginals(build_state(NamedState::WWBAR));
  CHECK_THROWS_AS(decohere_pair(m.rho_AB, other.rho_A, m.rho_B), InvalidArgument);
  try {
    decohere_pair(m.rho_AB, other.rho_A, m.rho_B);
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("max deviation") != std::string::npos);
  }
}

TEST_CASE("decohere_bipartition nonzero multisets") {
  SUBCASE("W -> {2/3, 1/3}") {
    const MarginalSet m = marginals(build_state(NamedState::W));
    const auto p = sorted_nonzero(decohere_bipartition(m.rho_ABC, m.rho_A, m.rho_BC).probabilities);
    REQUIRE(p.size() == 2);
    CHECK(std::abs(p[0] - 2.0 / 3.0) <= 1e-14);
    CHECK(std::abs(p[1] - 1.0 / 3.0) <= 1e-14);
  }
  SUBCASE("WWBAR -> {5/6, 1/6}") {
    const MarginalSet m = marginals(build_state(NamedState::WWBAR));
    const auto p = sorted_nonzero(decohere_bipartition(m.rho_ABC, m.rho_A, m.rho_BC).probabilities);
    REQUIRE(p.size() == 2);
    CHECK(std::abs(p[0] - 5.0 / 6.0) <= 1e-14);
    CHECK(std::abs(p[1] - 1.0 / 6.0) <= 1e-14);
  }
  SUBCASE("|000> -> (1, 0, ..., 0)") {
    RawAmplitudes raw{};
    raw.amplitudes[0] = 1.0;
    const MarginalSet m = marginals(build_state(raw));
    const auto p = decohere_bipartition(m.rho_ABC, m.rho_A, m.rho_BC).probabilities;
    CHECK(p[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < 8; ++i) CHECK(p[i] == doctest::Approx(0.0));
  }
}

TEST_CASE("decohere_bipartition rejects mixed states") {
  std::vector<double> d(8, 0.0);
  d[0] = d[7] = 0.5;
  const auto rho = DensityMatrix::from_matrix(ComplexMatrix::diagonal(d));
  CHECK_THROWS_AS(
      decohere_bipartition(rho, partial_trace(rho, {0}), partial_trace(rho, {1, 2})),
      InvalidArgument);
}

TEST_CASE("quantum deficit golden values, nats") {
  // Closed forms from the spectra and decohered diagonals above.
  const double w_pair = -shannon_nats({2.0 / 3, 1.0 / 3}) + shannon_nats({1.0 / 3, 1.0 / 3, 1.0 / 3});
  const double w_bip = shannon_nats({2.0 / 3, 1.0 / 3});
  const double ww_pair =
      -shannon_nats({5.0 / 6, 1.0 / 6}) + shannon_nats({0.75, 1.0 / 12, 1.0 / 12, 1.0 / 12});
  const double ww_bip = shannon_nats({5.0 / 6, 1.0 / 6});

  const auto w = deficit_report(NamedState::W, LogBase::nats);
  CHECK(std::abs(w.d_AB - w_pair) <= 1e-12);
  CHECK(std::abs(w.d_AC - w_pair) <= 1e-12);
  CHECK(std::abs(w.d_A_BC - w_bip) <= 1e-12);
  CHECK(std::abs(w.d_AB - 0.462) <= 0.0005);
  CHECK(std::abs(w.d_A_BC - 0.636) <= 0.001);
  CHECK_FALSE(w.degenerate_marginal);

  const auto ww = deficit_report(NamedState::WWBAR, LogBase::nats);
  CHECK(std::abs(ww.d_AB - ww_pair) <= 1e-12);
  CHECK(std::abs(ww.d_A_BC - ww_bip) <= 1e-12);
  CHECK(std::abs(ww.d_AB - 0.386) <= 0.0005);
  CHECK(std::abs(ww.d_A_BC - 0.45) <= 0.001);
}

TEST_CASE("GHZ deficits in bits and nats") {
  const auto bits = deficit_report(NamedState::GHZ, LogBase::bits);
  CHECK(std::abs(bits.d_AB) <= 1e-12);
  CHECK(std::abs(bits.d_AC) <= 1e-12);
  CHECK(std::abs(bits.d_A_BC - 1.0) <= 1e-12);
  CHECK(bits.degenerate_marginal);
  const auto nats = deficit_report(NamedState::GHZ, LogBase::nats);
  CHECK(std::abs(nats.d_A_BC - std::numbers::ln2) <= 1e-12);
}

TEST_CASE("product state has zero deficits") {
  RawAmplitudes raw{};
  raw.amplitudes[0] = 1.0;
  const auto r = deficit_report(raw, LogBase::nats);
  CHECK(r.d_AB == 0.0);
  CHECK(r.d_AC == 0.0);
  CHECK(r.d_A_BC == 0.0);
}

TEST_CASE("quantum_deficit input checks") {
  const Spectrum s({0.5, 0.5});
  CHECK_THROWS_AS(quantum_deficit(s, DecoheredDiagonal{{1.0, 0.0, 0.0}}, LogBase::nats),
                  InvalidArgument);
  CHECK(quantum_deficit(s, DecoheredDiagonal{{0.5, 0.5}}, LogBase::nats) == 0.0);
  // A diagonal with lower entropy than the spectrum cannot come from a basis
  // change; the engine refuses it.
  CHECK_THROWS_AS(quantum_deficit(s, DecoheredDiagonal{{1.0, 0.0}}, LogBase::nats), NumericFailure);
}

TEST_CASE("deficit invariants on random and family states") {
  std::mt19937_64 rng(31);
  std::vector<PureState> states;
  for (int k = 0; k < 100; ++k) states.emplace_back(testing::random_amplitudes(rng));
  for (double th = 0.1; th < 3.14; th += 0.3) states.push_back(theta_state(th));

  for (const PureState& psi : states) {
    const auto r = deficit_report(psi, LogBase::nats, RawAmplitudes{psi.amplitudes()});
    CHECK(r.d_AB >= 0.0);
    CHECK(r.d_AC >= 0.0);
    CHECK(r.d_A_BC >= 0.0);

    // Purity shortcut: the spectral term of the pure state vanishes.
    const MarginalSet m = marginals(psi);
    const auto diag = decohere_bipartition(m.rho_ABC, m.rho_A, m.rho_BC);
    double h = 0.0;
    for (double p : diag.probabilities)
      if (p > 0) h -= p * std::log(p);
    CHECK(std::abs(r.d_A_BC - h) <= 1e-10);
  }
}

TEST_CASE("d_AB = d_AC for permutation-symmetric states") {
  for (const StateSpec& spec :
       {StateSpec{NamedState::W}, StateSpec{NamedState::WBAR}, StateSpec{NamedState::WWBAR},
        StateSpec{NamedState::GHZ}, StateSpec{ThetaState{0.5}}, StateSpec{ThetaState{2.2}}}) {
    const auto r = deficit_report(spec, LogBase::nats);
    CHECK(std::abs(r.d_AB - r.d_AC) <= 1e-10);
  }
}

TEST_CASE("deficit does not depend on eigenvector ordering (non-degenerate marginals)") {
  const PureState psi = theta_state(1.0);
  const MarginalSet m = marginals(psi);
  const auto ea = eigh(m.rho_A.matrix());
  const auto eb = eigh(m.rho_B.matrix());
  // Ascending ordering of both factors.
  std::vector<double> p;
  for (int i = 1; i >= 0; --i)
    for (int j = 1; j >= 0; --j) p.push_back(expectation(m.rho_AB.matrix(), kron(ea.vector(i), eb.vector(j))));
  const double ascending = quantum_deficit(Spectrum::of(m.rho_AB), DecoheredDiagonal{p}, LogBase::nats);
  const double descending = deficit_report(psi, LogBase::nats, ThetaState{1.0}).d_AB;
  CHECK(std::abs(ascending - descending) <= 1e-12);
}

TEST_CASE("local unitaries leave deficits unchanged (non-degenerate marginals)") {
  std::mt19937_64 rng(77);
  for (const PureState& base : {build_state(NamedState::W), theta_state(1.0)}) {
    const auto ref = deficit_report(base, LogBase::nats, NamedState::W);
    for (int k = 0; k < 20; ++k) {
      const PureState rotated =
          testing::apply_local_unitaries(base, testing::random_unitary(2, rng),
                                         testing::random_unitary(2, rng),
                                         testing::random_unitary(2, rng));
      const auto r = deficit_report(rotated, LogBase::nats, NamedState::W);
      CHECK(std::abs(r.d_AB - ref.d_AB) <= 1e-8);
      CHECK(std::abs(r.d_AC - ref.d_AC) <= 1e-8);
      CHECK(std::abs(r.d_A_BC - ref.d_A_BC) <= 1e-8);
    }
  }
}
