#include "qdeficit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qdeficit/errors.hpp"

namespace qdeficit {

JointPMF3::JointPMF3(Dims3 dims, std::vector<double> p) : dims_(dims), p_(std::move(p)) {
  for (int d : dims_)
    if (d < 1) throw InvalidArgument("JointPMF3: alphabet sizes must be positive");
  const std::size_t expected = static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2];
  if (p_.size() != expected) {
    std::ostringstream msg;
    msg << "JointPMF3: expected " << expected << " entries, got " << p_.size();
    throw InvalidArgument(msg.str());
  }
  double total = 0.0;
  for (double& v : p_) {
    if (!(v >= -kNegativeTolerance)) {
      std::ostringstream msg;
      msg << "JointPMF3: negative probability " << v;
      throw InvalidArgument(msg.str());
    }
    v = std::max(v, 0.0);
    total += v;
  }
  if (!(std::abs(total - 1.0) <= kTotalTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "JointPMF3: probabilities sum to " << total;
    throw InvalidArgument(msg.str());
  }
}

std::vector<double> JointPMF3::marginal(VarSet keep) const {
  const int nx = keep.has(VarSet::kX) ? dims_[0] : 1;
  const int ny = keep.has(VarSet::kY) ? dims_[1] : 1;
  const int nz = keep.has(VarSet::kZ) ? dims_[2] : 1;
  std::vector<double> out(static_cast<std::size_t>(nx) * ny * nz, 0.0);
  for (int x = 0; x < dims_[0]; ++x)
    for (int y = 0; y < dims_[1]; ++y)
      for (int z = 0; z < dims_[2]; ++z) {
        const int ix = nx == 1 ? 0 : x, iy = ny == 1 ? 0 : y, iz = nz == 1 ? 0 : z;
        out[(static_cast<std::size_t>(ix) * ny + iy) * nz + iz] += (*this)(x, y, z);
      }
  return out;
}

double entropy(const JointPMF3& pmf, VarSet subset, LogBase base) {
  if (subset.empty()) throw InvalidArgument("entropy: empty variable set");
  return std::max(0.0, -xlogx_sum(pmf.marginal(subset), base));
}

double mutual_information(const JointPMF3& pmf, VarSet left, VarSet right, LogBase base) {
  if (left.empty() || right.empty()) throw InvalidArgument("mutual_information: empty group");
  if (left.overlaps(right)) throw InvalidArgument("mutual_information: groups overlap");
  return entropy(pmf, left, base) + entropy(pmf, right, base) - entropy(pmf, left | right, base);
}

MITriple mi_triple(const JointPMF3& pmf, LogBase base) {
  MITriple t;
  t.base = base;
  t.x = mutual_information(pmf, Y, X | Z, base);
  t.y = mutual_information(pmf, Y, X, base);
  t.z = mutual_information(pmf, Y, Z, base);
  t.h_xz = mutual_information(pmf, X, Z, base);
  for (double* v : {&t.x, &t.y, &t.z, &t.h_xz}) {
    if (*v < -kMITolerance) throw NumericFailure("mi_triple: negative mutual information");
    *v = std::max(0.0, *v);
  }
  // y, z <= x holds for every distribution. y + z >= x does not (Y = X xor Z
  // with independent uniform X, Z gives y = z = 0, x = 1 bit), so it is
  // reported by verify_inequality_chain rather than enforced here.
  if (t.y > t.x + kMITolerance || t.z > t.x + kMITolerance)
    throw NumericFailure("mi_triple: mutual informations violate the discarding bounds");
  return t;
}

std::array<bool, 5> InequalityReport::holds() const {
  std::array<bool, 5> out{};
  const auto s = slacks();
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[k] >= -kInequalitySlackTolerance;
  return out;
}

bool InequalityReport::all_hold() const {
  const auto h = holds();
  return std::all_of(h.begin(), h.end(), [](bool b) { return b; });
}

InequalityReport verify_inequality_chain(const JointPMF3& pmf, LogBase base) {
  // Raw differences, without mi_triple's clamping, so violations stay visible.
  const double hx = entropy(pmf, X, base), hy = entropy(pmf, Y, base), hz = entropy(pmf, Z, base);
  const double hxy = entropy(pmf, X | Y, base), hyz = entropy(pmf, Y | Z, base);
  const double hxz = entropy(pmf, X | Z, base), hxyz = entropy(pmf, X | Y | Z, base);

  const double x = hy + hxz - hxyz;
  const double y = hy + hx - hxy;
  const double z = hy + hz - hyz;
  const double i_xz = hx + hz - hxz;

  InequalityReport r;
  r.strong_subadditivity = hxy + hyz - hxyz - hy;
  r.four_term = x + i_xz - y - z;
  r.reversed_monogamy = y + z - x;
  r.discard_z = x - y;
  r.discard_x = x - z;
  return r;
}

std::optional<int> min_mi_power(const MITriple& t, int n_max, double tol) {
  if (n_max < 1) throw InvalidArgument("min_mi_power: n_max must be at least 1");
  if (!(tol >= 0.0)) throw InvalidArgument("min_mi_power: tolerance must be non-negative");
  for (int n = 1; n <= n_max; ++n)
    if (std::pow(t.y, n) + std::pow(t.z, n) <= std::pow(t.x, n) + tol) return n;
  return std::nullopt;
}

JointPMF3 sample_pmf(Dims3 dims, std::uint64_t seed) {
  for (int d : dims)
    if (d < 2 || d > 4) throw InvalidArgument("sample_pmf: alphabet sizes must be in 2..4");
  const std::size_t n = static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) {
    v = exp1(rng);
    total += v;
  }
  for (double& v : p) v /= total;
  // Push the rounding residue onto the largest entry so the total is 1 to
  // within a few ulps.
  double sum = 0.0;
  for (double v : p) sum += v;
  *std::max_element(p.begin(), p.end()) += 1.0 - sum;
  return JointPMF3(dims, std::move(p));
}

}  // namespace qdeficit
