#pragma once

// Rajagopal-Rendell quantum deficit: relative entropy between a bipartite
// state and its classically decohered counterpart, the latter being the
// state with off-diagonal elements removed in the product eigenbasis of the
// two marginals.

#include <vector>

#include "qdeficit/linalg.hpp"
#include "qdeficit/states.hpp"

namespace qdeficit {

// Diagonal of rho in a product eigenbasis |a> (x) |b>, ordered (a major,
// b minor) with each factor's eigenvalues descending.
struct DecoheredDiagonal {
  std::vector<double> probabilities;
};

inline constexpr double kMarginalConsistencyTolerance = 1e-8;
inline constexpr double kPurityTolerance = 1e-8;
inline constexpr double kDeficitNegativeTolerance = 1e-10;

// rho_pair is a two-qubit state; rho_left/right must be its marginals.
DecoheredDiagonal decohere_pair(const DensityMatrix& rho_pair, const DensityMatrix& rho_left,
                                const DensityMatrix& rho_right);

// rho_ABC must be pure; rho_A and rho_BC its marginals.
DecoheredDiagonal decohere_bipartition(const DensityMatrix& rho_ABC, const DensityMatrix& rho_A,
                                       const DensityMatrix& rho_BC);

// sum lambda log lambda - sum P log P. Clamped to 0 within
// kDeficitNegativeTolerance; a more negative value is a NumericFailure.
double quantum_deficit(const Spectrum& spectrum, const DecoheredDiagonal& diag, LogBase base);

struct DeficitReport {
  double d_AB = 0.0;
  double d_AC = 0.0;
  double d_A_BC = 0.0;
  LogBase base = LogBase::nats;
  StateSpec state = NamedState::W;
  // Some marginal used for decoherence has a degenerate eigenvalue cluster
  // (single-qubit marginals, or the nonzero part of rho_BC), so the
  // decohering basis came from the canonical completion convention.
  bool degenerate_marginal = false;
};

DeficitReport deficit_report(const StateSpec& spec, LogBase base);
// Same, for an already-built state; `label` is recorded as the report's state.
DeficitReport deficit_report(const PureState& psi, LogBase base, StateSpec label);

}  // namespace qdeficit
