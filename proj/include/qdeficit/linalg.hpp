#pragma once

// Dense complex linear algebra for the small Hermitian matrices that appear
// in 3-qubit problems (dims 2, 4, 8): eigendecomposition, partial trace and
// the spectral entropy term.
//
// Basis convention: for an n-qubit register, basis state |q0 q1 ... q(n-1)>
// has index sum_k q_k * 2^(n-1-k), i.e. qubit 0 (A) is the most significant
// bit. For three qubits |abc> <-> 4a + 2b + c.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdeficit {

namespace kernels {
struct KernelTable;
}

using cplx = std::complex<double>;

enum class LogBase { nats, bits };

const char* to_string(LogBase base) noexcept;

// Natural log divided by ln(2) for bits.
double log_in(double x, LogBase base) noexcept;

// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const cplx> ket);  // |v><v|

  std::size_t dim() const noexcept { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }
  std::span<cplx> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  // max_ij |m_ij - conj(m_ji)|
  double hermiticity_defect() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

// max_ij |a_ij - b_ij|; dims must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b);

std::vector<cplx> matvec(const ComplexMatrix& m, std::span<const cplx> v);

// Re <v|M|v>.
double expectation(const ComplexMatrix& m, std::span<const cplx> v);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]

  std::vector<cplx> vector(std::size_t k) const;
};

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kDegeneracyTolerance = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;

// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
//
// Eigenvalues come back in descending order. Within a cluster of eigenvalues
// closer than kDegeneracyTolerance the eigenvectors are replaced by the
// Gram-Schmidt orthonormalization of the canonical basis vectors projected
// onto the cluster's subspace, taken in index order; every eigenvector is
// then phased so that its first component of maximal modulus is real and
// positive. The result is a deterministic function of the input.
//
// Throws InvalidArgument when the input is not Hermitian within
// kHermitianTolerance, NumericFailure if the sweeps do not converge.
EigenDecomposition eigh(const ComplexMatrix& m);
// Same, on an explicit kernel table (used for scalar/SIMD equivalence checks).
EigenDecomposition eigh(const ComplexMatrix& m, const kernels::KernelTable& kt);

// Set of qubit positions; bit k selects qubit k (0 = A = most significant).
class QubitSet {
 public:
  constexpr QubitSet() = default;
  constexpr QubitSet(std::initializer_list<int> qubits) {
    for (int q : qubits) bits_ |= (1u << q);
  }
  static constexpr QubitSet from_bits(std::uint32_t bits) {
    QubitSet s;
    s.bits_ = bits;
    return s;
  }
  constexpr bool contains(int q) const { return (bits_ >> q) & 1u; }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;

 private:
  std::uint32_t bits_ = 0;
};

namespace qubit {
inline constexpr int A = 0;
inline constexpr int B = 1;
inline constexpr int C = 2;
}  // namespace qubit

// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  inline static constexpr double kTolerance = 1e-10;

  // Validates hermiticity, trace and positivity within tol.
  static DensityMatrix from_matrix(ComplexMatrix m, double tol = kTolerance);
  // |psi><psi| for a normalized ket.
  static DensityMatrix from_pure(std::span<const cplx> ket);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  int qubits() const noexcept;
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend DensityMatrix partial_trace(const DensityMatrix&, QubitSet);
  ComplexMatrix m_;
};

// Reduced state on the kept qubits (positions relative to rho's register,
// order preserved). keep must be a non-empty proper subset.
DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet keep);

// Eigenvalues of a density matrix: each >= -1e-12, summing to 1 within 1e-10,
// stored clamped to [0, 1].
class Spectrum {
 public:
  inline static constexpr double kNegativeTolerance = 1e-12;
  inline static constexpr double kSumTolerance = 1e-10;

  explicit Spectrum(std::vector<double> values);
  static Spectrum of(const DensityMatrix& rho);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

// sum_k lambda_k log(lambda_k) with 0 log 0 = 0. Always <= 0.
double spectral_entropy_term(const Spectrum& s, LogBase base);

// Same for a raw probability vector (no validation).
double xlogx_sum(std::span<const double> p, LogBase base) noexcept;

}  // namespace qdeficit
