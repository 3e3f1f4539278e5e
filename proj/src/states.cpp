#include "qdeficit/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "qdeficit/errors.hpp"

namespace qdeficit {

namespace {

constexpr double kRenormalizeTolerance = 1e-8;

double norm_squared(const Amplitudes& a) {
  double acc = 0.0;
  for (const cplx& x : a) acc += std::norm(x);
  return acc;
}

Amplitudes w_amplitudes() {
  const double k = 1.0 / std::sqrt(3.0);
  Amplitudes a{};
  a[0b100] = a[0b010] = a[0b001] = k;
  return a;
}

Amplitudes wbar_amplitudes() {
  const double k = 1.0 / std::sqrt(3.0);
  Amplitudes a{};
  a[0b011] = a[0b101] = a[0b110] = k;
  return a;
}

}  // namespace

PureState::PureState(const Amplitudes& amplitudes) : amps_(amplitudes) {
  const double n2 = norm_squared(amps_);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    std::ostringstream msg;
    msg << "PureState: amplitudes have squared norm " << n2;
    throw InvalidArgument(msg.str());
  }
}

DensityMatrix PureState::density() const { return DensityMatrix::from_pure(amps_); }

const char* to_string(NamedState s) noexcept {
  switch (s) {
    case NamedState::W: return "W";
    case NamedState::WBAR: return "WBAR";
    case NamedState::WWBAR: return "WWBAR";
    case NamedState::GHZ: return "GHZ";
  }
  return "?";
}

NamedState named_state_from_string(std::string_view name) {
  for (NamedState s : {NamedState::W, NamedState::WBAR, NamedState::WWBAR, NamedState::GHZ})
    if (name == to_string(s)) return s;
  throw InvalidArgument("unknown state name '" + std::string(name) +
                        "' (expected W, WBAR, WWBAR or GHZ)");
}

PureState theta_state(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << "theta " << theta << " outside (0, pi]";
    throw InvalidArgument(msg.str());
  }
  // Pin the endpoint so theta = pi reproduces |W> bit for bit.
  const double c = theta == std::numbers::pi ? 0.0 : std::cos(theta / 2.0);
  const double s = theta == std::numbers::pi ? 1.0 : std::sin(theta / 2.0);
  Amplitudes a = w_amplitudes();
  for (cplx& x : a) x *= s;
  a[0] = c;
  return PureState(a);
}

PureState build_state(const StateSpec& spec) {
  struct Visitor {
    PureState operator()(NamedState s) const {
      switch (s) {
        case NamedState::W: return PureState(w_amplitudes());
        case NamedState::WBAR: return PureState(wbar_amplitudes());
        case NamedState::WWBAR: {
          Amplitudes a{};
          const Amplitudes w = w_amplitudes(), wb = wbar_amplitudes();
          for (std::size_t i = 0; i < a.size(); ++i) a[i] = (w[i] + wb[i]) / std::sqrt(2.0);
          return PureState(a);
        }
        case NamedState::GHZ: {
          Amplitudes a{};
          a[0b000] = a[0b111] = 1.0 / std::sqrt(2.0);
          return PureState(a);
        }
      }
      throw InvalidArgument("unknown named state");
    }
    PureState operator()(ThetaState t) const { return theta_state(t.theta); }
    PureState operator()(const RawAmplitudes& raw) const {
      const double n2 = norm_squared(raw.amplitudes);
      if (!(n2 > 0.0)) throw InvalidArgument("amplitudes are all zero");
      if (!(std::abs(std::sqrt(n2) - 1.0) <= kRenormalizeTolerance)) {
        std::ostringstream msg;
        msg << "amplitudes are not normalized (norm " << std::sqrt(n2) << ")";
        throw InvalidArgument(msg.str());
      }
      Amplitudes a = raw.amplitudes;
      const double len = std::sqrt(n2);
      for (cplx& x : a) x /= len;
      return PureState(a);
    }
  };
  return std::visit(Visitor{}, spec);
}

std::string describe(const StateSpec& spec) {
  if (const auto* n = std::get_if<NamedState>(&spec)) return to_string(*n);
  if (const auto* t = std::get_if<ThetaState>(&spec)) {
    std::ostringstream out;
    out.precision(12);
    out << "theta=" << t->theta;
    return out.str();
  }
  return "amplitudes";
}

StateSpec state_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("state spec must be a JSON object");
  const int populated = int(j.contains("name")) + int(j.contains("theta")) +
                        int(j.contains("amplitudes"));
  if (populated != 1)
    throw InvalidArgument("state spec needs exactly one of 'name', 'theta', 'amplitudes'");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "theta" && key != "amplitudes")
      throw InvalidArgument("state spec has unknown field '" + key + "'");

  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InvalidArgument("'name' must be a string");
    return named_state_from_string(j["name"].get<std::string>());
  }
  if (j.contains("theta")) {
    if (!j["theta"].is_number()) throw InvalidArgument("'theta' must be a number");
    const double theta = j["theta"].get<double>();
    if (!(theta > 0.0 && theta <= std::numbers::pi))
      throw InvalidArgument("'theta' must lie in (0, pi]");
    return ThetaState{theta};
  }
  const auto& arr = j["amplitudes"];
  if (!arr.is_array() || arr.size() != 8)
    throw InvalidArgument("'amplitudes' must be an array of 8 [re, im] pairs");
  RawAmplitudes raw{};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw InvalidArgument("'amplitudes' entries must be [re, im] number pairs");
    raw.amplitudes[i] = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return raw;
}

StateSpec parse_state_spec(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("state spec is not valid JSON: ") + e.what());
  }
  return state_spec_from_json(j);
}

nlohmann::json to_json(const StateSpec& spec) {
  if (const auto* n = std::get_if<NamedState>(&spec)) return {{"name", to_string(*n)}};
  if (const auto* t = std::get_if<ThetaState>(&spec)) return {{"theta", t->theta}};
  nlohmann::json arr = nlohmann::json::array();
  for (const cplx& x : std::get<RawAmplitudes>(spec).amplitudes) arr.push_back({x.real(), x.imag()});
  return {{"amplitudes", arr}};
}

MarginalSet marginals(const PureState& psi) {
  const DensityMatrix rho = psi.density();
  using namespace qubit;
  return MarginalSet{
      partial_trace(rho, {A}),    partial_trace(rho, {B}),    partial_trace(rho, {C}),
      partial_trace(rho, {A, B}), partial_trace(rho, {A, C}), partial_trace(rho, {B, C}),
      rho,
  };
}

}  // namespace qdeficit
