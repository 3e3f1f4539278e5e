#include "qdeficit/deficit.hpp"

#include <algorithm>
#include <sstream>

#include "qdeficit/errors.hpp"

namespace qdeficit {

namespace {

void require_marginal(const DensityMatrix& joint, QubitSet keep, const DensityMatrix& given,
                      const char* what) {
  const DensityMatrix expected = partial_trace(joint, keep);
  if (expected.dim() != given.dim()) {
    std::ostringstream msg;
    msg << what << ": marginal has dimension " << given.dim() << ", expected " << expected.dim();
    throw InvalidArgument(msg.str());
  }
  const double dev = max_abs_diff(expected.matrix(), given.matrix());
  if (!(dev <= kMarginalConsistencyTolerance)) {
    std::ostringstream msg;
    msg << what << ": inconsistent marginals (max deviation " << dev << ")";
    throw InvalidArgument(msg.str());
  }
}

DecoheredDiagonal product_basis_diagonal(const ComplexMatrix& rho, const EigenDecomposition& left,
                                         const EigenDecomposition& right) {
  DecoheredDiagonal out;
  out.probabilities.reserve(rho.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < left.values.size(); ++i) {
    const auto a = left.vector(i);
    for (std::size_t j = 0; j < right.values.size(); ++j) {
      const auto b = right.vector(j);
      const double p = std::max(0.0, expectation(rho, kron(a, b)));
      out.probabilities.push_back(p);
      total += p;
    }
  }
  if (std::abs(total - 1.0) > 1e-10) throw NumericFailure("decohered diagonal lost normalization");
  for (double& p : out.probabilities) p /= total;
  return out;
}

bool has_degenerate_cluster(std::span<const double> values, double floor) {
  for (std::size_t k = 0; k + 1 < values.size(); ++k)
    if (values[k + 1] > floor && values[k] - values[k + 1] <= kDegeneracyTolerance) return true;
  return false;
}

}  // namespace

DecoheredDiagonal decohere_pair(const DensityMatrix& rho_pair, const DensityMatrix& rho_left,
                                const DensityMatrix& rho_right) {
  if (rho_pair.dim() != 4) throw InvalidArgument("decohere_pair: pair state must be 4x4");
  require_marginal(rho_pair, {0}, rho_left, "decohere_pair");
  require_marginal(rho_pair, {1}, rho_right, "decohere_pair");
  return product_basis_diagonal(rho_pair.matrix(), eigh(rho_left.matrix()),
                                eigh(rho_right.matrix()));
}

DecoheredDiagonal decohere_bipartition(const DensityMatrix& rho_ABC, const DensityMatrix& rho_A,
                                       const DensityMatrix& rho_BC) {
  if (rho_ABC.dim() != 8) throw InvalidArgument("decohere_bipartition: state must be 8x8");
  const double top = eigh(rho_ABC.matrix()).values.front();
  if (top < 1.0 - kPurityTolerance) {
    std::ostringstream msg;
    msg << "decohere_bipartition: state is mixed (largest eigenvalue " << top << ")";
    throw InvalidArgument(msg.str());
  }
  require_marginal(rho_ABC, {0}, rho_A, "decohere_bipartition");
  require_marginal(rho_ABC, {1, 2}, rho_BC, "decohere_bipartition");
  return product_basis_diagonal(rho_ABC.matrix(), eigh(rho_A.matrix()), eigh(rho_BC.matrix()));
}

double quantum_deficit(const Spectrum& spectrum, const DecoheredDiagonal& diag, LogBase base) {
  if (spectrum.size() != diag.probabilities.size())
    throw InvalidArgument("quantum_deficit: spectrum and decohered diagonal differ in length");
  double sum = 0.0;
  for (double p : diag.probabilities) sum += p;
  if (std::abs(sum - 1.0) > 1e-10) throw InvalidArgument("quantum_deficit: diagonal not normalized");

  const double d = spectral_entropy_term(spectrum, base) - xlogx_sum(diag.probabilities, base);
  if (d < -kDeficitNegativeTolerance) {
    std::ostringstream msg;
    msg << "quantum_deficit: negative relative entropy " << d;
    throw NumericFailure(msg.str());
  }
  return std::max(0.0, d);
}

DeficitReport deficit_report(const PureState& psi, LogBase base, StateSpec label) {
  const MarginalSet m = marginals(psi);

  DeficitReport r;
  r.base = base;
  r.state = std::move(label);
  r.d_AB = quantum_deficit(Spectrum::of(m.rho_AB), decohere_pair(m.rho_AB, m.rho_A, m.rho_B), base);
  r.d_AC = quantum_deficit(Spectrum::of(m.rho_AC), decohere_pair(m.rho_AC, m.rho_A, m.rho_C), base);
  r.d_A_BC = quantum_deficit(Spectrum::of(m.rho_ABC),
                             decohere_bipartition(m.rho_ABC, m.rho_A, m.rho_BC), base);

  for (const DensityMatrix* single : {&m.rho_A, &m.rho_B, &m.rho_C})
    if (has_degenerate_cluster(eigh(single->matrix()).values, -1.0)) r.degenerate_marginal = true;
  if (has_degenerate_cluster(eigh(m.rho_BC.matrix()).values, kDegeneracyTolerance))
    r.degenerate_marginal = true;
  return r;
}

DeficitReport deficit_report(const StateSpec& spec, LogBase base) {
  return deficit_report(build_state(spec), base, spec);
}

}  // namespace qdeficit
