#pragma once

// Shannon-information engine for trivariate distributions P(X, Y, Z):
// entropies of marginals, mutual informations with Y as pivot, the chain of
// entropy inequalities behind power-monogamy of mutual information, and the
// minimal-power finder.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdeficit/linalg.hpp"

namespace qdeficit {

// Subset of {X, Y, Z}.
class VarSet {
 public:
  static constexpr std::uint8_t kX = 1, kY = 2, kZ = 4;
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint8_t bits) : bits_(bits) {}
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool has(std::uint8_t v) const { return (bits_ & v) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr bool overlaps(VarSet o) const { return (bits_ & o.bits_) != 0; }

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr VarSet X{VarSet::kX};
inline constexpr VarSet Y{VarSet::kY};
inline constexpr VarSet Z{VarSet::kZ};

using Dims3 = std::array<int, 3>;

class JointPMF3 {
 public:
  inline static constexpr double kTotalTolerance = 1e-12;
  inline static constexpr double kNegativeTolerance = 1e-15;

  // p is indexed [x][y][z] row-major; entries in [-1e-15, 0) are clamped.
  JointPMF3(Dims3 dims, std::vector<double> p);

  const Dims3& dims() const noexcept { return dims_; }
  double operator()(int x, int y, int z) const {
    return p_[(static_cast<std::size_t>(x) * dims_[1] + y) * dims_[2] + z];
  }
  const std::vector<double>& values() const noexcept { return p_; }

  // Marginal over the variables in `keep`, as a flat probability vector.
  std::vector<double> marginal(VarSet keep) const;

 private:
  Dims3 dims_;
  std::vector<double> p_;
};

double entropy(const JointPMF3& pmf, VarSet subset, LogBase base);

// H(L) + H(R) - H(L u R); groups must be disjoint and non-empty.
double mutual_information(const JointPMF3& pmf, VarSet left, VarSet right, LogBase base);

struct MITriple {
  double x = 0.0;     // H(Y:XZ)
  double y = 0.0;     // H(Y:X)
  double z = 0.0;     // H(Y:Z)
  double h_xz = 0.0;  // H(X:Z)
  LogBase base = LogBase::nats;
};

inline constexpr double kMITolerance = 1e-12;

MITriple mi_triple(const JointPMF3& pmf, LogBase base);

inline constexpr double kInequalitySlackTolerance = 1e-10;

// Each slack is (right side - left side) of the inequality, so >= 0 means
// it holds. Strong subadditivity, the four-term bound and both discarding
// bounds hold for every distribution; the reversed monogamy y + z >= x is
// checked as stated but fails whenever Y carries synergistic information
// about (X, Z), e.g. Y = X xor Z.
struct InequalityReport {
  double strong_subadditivity = 0.0;  // H(X,Y) + H(Y,Z) - H(X,Y,Z) - H(Y)
  double four_term = 0.0;             // x + h_xz - y - z
  double reversed_monogamy = 0.0;     // y + z - x
  double discard_z = 0.0;             // x - y
  double discard_x = 0.0;             // x - z

  std::array<double, 5> slacks() const {
    return {strong_subadditivity, four_term, reversed_monogamy, discard_z, discard_x};
  }
  std::array<bool, 5> holds() const;
  bool all_hold() const;
};

InequalityReport verify_inequality_chain(const JointPMF3& pmf, LogBase base);

inline constexpr double kDefaultPowerTolerance = 1e-12;

// Smallest n <= n_max with y^n + z^n <= x^n + tol, if any.
std::optional<int> min_mi_power(const MITriple& t, int n_max, double tol = kDefaultPowerTolerance);

// Uniform point on the probability simplex (normalized Exp(1) draws),
// deterministic per seed. Each dimension must be in 2..4.
JointPMF3 sample_pmf(Dims3 dims, std::uint64_t seed);

}  // namespace qdeficit
