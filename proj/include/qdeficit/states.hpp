#pragma once

// Three-qubit pure states (qubit order A, B, C; |abc> <-> 4a + 2b + c) and
// their reduced density matrices.

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "qdeficit/linalg.hpp"

namespace qdeficit {

using Amplitudes = std::array<cplx, 8>;

class PureState {
 public:
  inline static constexpr double kNormTolerance = 1e-10;

  // Requires sum |a_i|^2 = 1 within kNormTolerance.
  explicit PureState(const Amplitudes& amplitudes);

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  DensityMatrix density() const;

 private:
  Amplitudes amps_;
};

enum class NamedState { W, WBAR, WWBAR, GHZ };

const char* to_string(NamedState s) noexcept;
NamedState named_state_from_string(std::string_view name);  // throws InvalidArgument

struct ThetaState {
  double theta;  // radians, in (0, pi]
};

struct RawAmplitudes {
  Amplitudes amplitudes;
};

using StateSpec = std::variant<NamedState, ThetaState, RawAmplitudes>;

// cos(theta/2)|000> + sin(theta/2)|W>; theta must lie in (0, pi].
PureState theta_state(double theta);

// Raw amplitudes whose norm is within 1e-8 of one are renormalized; an
// all-zero vector or one further from unit norm is rejected.
PureState build_state(const StateSpec& spec);

// Short label: "W", "theta=1.5", "amplitudes".
std::string describe(const StateSpec& spec);

// JSON record with exactly one of "name", "theta" (radians) or "amplitudes"
// (eight [re, im] pairs).
StateSpec state_spec_from_json(const nlohmann::json& j);
StateSpec parse_state_spec(std::string_view json_text);
nlohmann::json to_json(const StateSpec& spec);

struct MarginalSet {
  DensityMatrix rho_A, rho_B, rho_C;
  DensityMatrix rho_AB, rho_AC, rho_BC;
  DensityMatrix rho_ABC;
};

MarginalSet marginals(const PureState& psi);

}  // namespace qdeficit
