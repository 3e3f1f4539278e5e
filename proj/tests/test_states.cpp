#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qdeficit/errors.hpp"
#include "qdeficit/states.hpp"

using namespace qdeficit;

namespace {

std::vector<StateSpec> symmetric_specs() {
  return {NamedState::W, NamedState::WBAR, NamedState::WWBAR, NamedState::GHZ, ThetaState{0.3},
          ThetaState{1.0}, ThetaState{2.7}, ThetaState{std::numbers::pi}};
}

}  // namespace

TEST_CASE("named W amplitudes") {
  const PureState w = build_state(NamedState::W);
  const double k = 1.0 / std::sqrt(3.0);
  const double expected[8] = {0, k, k, 0, k, 0, 0, 0};
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(w[i] - expected[i]) <= 1e-15);
}

TEST_CASE("WWBAR has 1/sqrt(6) on the six weight-1 and weight-2 basis states") {
  const PureState s = build_state(NamedState::WWBAR);
  const double k = 1.0 / std::sqrt(6.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const bool mixed_weight = i != 0 && i != 7;
    CHECK(std::abs(s[i] - (mixed_weight ? k : 0.0)) <= 1e-15);
  }
}

TEST_CASE("theta = pi reproduces W exactly") {
  const PureState a = build_state(ThetaState{std::numbers::pi});
  const PureState w = build_state(NamedState::W);
  for (std::size_t i = 0; i < 8; ++i) CHECK(a[i] == w[i]);
}

TEST_CASE("theta family amplitudes") {
  const double theta = 1.2;
  const PureState s = theta_state(theta);
  CHECK(s[0].real() == doctest::Approx(std::cos(0.6)));
  CHECK(s[1].real() == doctest::Approx(std::sin(0.6) / std::sqrt(3.0)));
}

TEST_CASE("theta outside (0, pi] is rejected") {
  CHECK_THROWS_AS(build_state(ThetaState{0.0}), InvalidArgument);
  CHECK_THROWS_AS(build_state(ThetaState{-0.1}), InvalidArgument);
  CHECK_THROWS_AS(build_state(ThetaState{3.2}), InvalidArgument);
}

TEST_CASE("raw amplitudes: renormalization window and zero vector") {
  RawAmplitudes raw{};
  CHECK_THROWS_AS(build_state(raw), InvalidArgument);

  raw.amplitudes[0] = 1.0 + 5e-9;
  const PureState s = build_state(raw);
  CHECK(s[0].real() == 1.0);

  raw.amplitudes[0] = 2.0;
  CHECK_THROWS_AS(build_state(raw), InvalidArgument);
}

TEST_CASE("marginals of WWBAR") {
  const MarginalSet m = marginals(build_state(NamedState::WWBAR));
  const double s = 1.0 / 6.0;
  const ComplexMatrix ab{{s, s, s, 0}, {s, 2 * s, 2 * s, s}, {s, 2 * s, 2 * s, s}, {0, s, s, s}};
  const ComplexMatrix a{{3 * s, 2 * s}, {2 * s, 3 * s}};
  CHECK(max_abs_diff(m.rho_AB.matrix(), ab) <= 1e-15);
  CHECK(max_abs_diff(m.rho_AC.matrix(), ab) <= 1e-15);
  CHECK(max_abs_diff(m.rho_A.matrix(), a) <= 1e-15);
}

TEST_CASE("marginals of |000> are pure projectors") {
  RawAmplitudes raw{};
  raw.amplitudes[0] = 1.0;
  const MarginalSet m = marginals(build_state(raw));
  for (const DensityMatrix* r : {&m.rho_A, &m.rho_B, &m.rho_C, &m.rho_AB, &m.rho_AC, &m.rho_BC}) {
    const ComplexMatrix sq = r->matrix() * r->matrix();
    CHECK(max_abs_diff(sq, r->matrix()) <= 1e-15);
    CHECK(std::abs(r->matrix()(0, 0) - 1.0) <= 1e-15);
  }
}

TEST_CASE("symmetric states have equal single-qubit marginals and rho_AB = rho_AC") {
  for (const StateSpec& spec : symmetric_specs()) {
    CAPTURE(describe(spec));
    const MarginalSet m = marginals(build_state(spec));
    CHECK(max_abs_diff(m.rho_A.matrix(), m.rho_B.matrix()) <= 1e-12);
    CHECK(max_abs_diff(m.rho_A.matrix(), m.rho_C.matrix()) <= 1e-12);
    CHECK(max_abs_diff(m.rho_AB.matrix(), m.rho_AC.matrix()) <= 1e-12);
    CHECK(eigh(m.rho_ABC.matrix()).values[1] <= 1e-12);  // rank one
  }
}

TEST_CASE("state spec JSON parsing") {
  CHECK(std::get<NamedState>(parse_state_spec(R"({"name":"GHZ"})")) == NamedState::GHZ);
  CHECK(std::get<ThetaState>(parse_state_spec(R"({"theta": 1.5})")).theta == 1.5);
  const auto raw = std::get<RawAmplitudes>(
      parse_state_spec(R"({"amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0.0]]})"));
  CHECK(raw.amplitudes[0] == cplx{1.0, 0.0});

  CHECK_THROWS_AS(parse_state_spec(R"({"name":"W","theta":1})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec(R"({})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec(R"({"name":"Q"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec(R"({"theta": 0})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec(R"({"amplitudes": [[1,0]]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec(R"({"name":"W","extra":1})"), InvalidArgument);
  CHECK_THROWS_AS(parse_state_spec("not json"), InvalidArgument);
}

TEST_CASE("state spec JSON round trip") {
  for (const StateSpec& spec : symmetric_specs()) {
    const StateSpec back = state_spec_from_json(to_json(spec));
    CHECK(describe(back) == describe(spec));
  }
}
