#include "qdeficit/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qdeficit/errors.hpp"
#include "qdeficit/kernels.hpp"

namespace qdeficit {

const char* to_string(LogBase base) noexcept { return base == LogBase::bits ? "bits" : "nats"; }

double log_in(double x, LogBase base) noexcept {
  return base == LogBase::bits ? std::log2(x) : std::log(x);
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) throw InvalidArgument("ComplexMatrix: entry count is not dim*dim");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw InvalidArgument("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix sum: dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix difference: dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> out;
  out.reserve(a.size() * b.size());
  for (const cplx& x : a)
    for (const cplx& y : b) out.push_back(x * y);
  return out;
}

std::vector<cplx> matvec(const ComplexMatrix& m, std::span<const cplx> v) {
  if (v.size() != m.dim()) throw InvalidArgument("apply: dimension mismatch");
  std::vector<cplx> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

double expectation(const ComplexMatrix& m, std::span<const cplx> v) {
  if (v.size() != m.dim()) throw InvalidArgument("expectation: dimension mismatch");
  return kernels::active_kernels().hermitian_form(m.data(), v.data(), m.dim());
}

// ---------------------------------------------------------------------------
// Eigensolver

std::vector<cplx> EigenDecomposition::vector(std::size_t k) const {
  std::vector<cplx> v(vectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
  return v;
}

namespace {

double frobenius(const ComplexMatrix& m) {
  double acc = 0.0;
  for (std::size_t k = 0; k < m.dim() * m.dim(); ++k) acc += std::norm(m.data()[k]);
  return std::sqrt(acc);
}

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {  // <a|b>
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2(std::span<const cplx> a) { return std::sqrt(dot(a, a).real()); }

// Columns [first, last) of `vectors` span one eigenvalue cluster. Rebuild them
// from the canonical basis projected onto that span.
void complete_cluster(ComplexMatrix& vectors, std::size_t first, std::size_t last) {
  constexpr double kAcceptResidual = 1e-6;
  const std::size_t n = vectors.dim();
  std::vector<std::vector<cplx>> cluster;
  for (std::size_t k = first; k < last; ++k) {
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vectors(i, k);
    cluster.push_back(std::move(v));
  }

  std::vector<std::vector<cplx>> chosen;
  for (std::size_t e = 0; e < n && chosen.size() < cluster.size(); ++e) {
    std::vector<cplx> w(n);
    for (const auto& v : cluster) {
      const cplx coeff = std::conj(v[e]);
      for (std::size_t i = 0; i < n; ++i) w[i] += coeff * v[i];
    }
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : chosen) {
        const cplx c = dot(u, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * u[i];
      }
    const double len = norm2(w);
    if (len <= kAcceptResidual) continue;
    for (auto& x : w) x /= len;
    chosen.push_back(std::move(w));
  }
  if (chosen.size() != cluster.size())
    throw NumericFailure("eigh: could not complete degenerate eigenspace");

  for (std::size_t k = first; k < last; ++k)
    for (std::size_t i = 0; i < n; ++i) vectors(i, k) = chosen[k - first][i];
}

void fix_phase(ComplexMatrix& vectors, std::size_t k) {
  const std::size_t n = vectors.dim();
  double biggest = 0.0;
  for (std::size_t i = 0; i < n; ++i) biggest = std::max(biggest, std::abs(vectors(i, k)));
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::abs(vectors(i, k));
    if (mag >= biggest * (1.0 - 1e-9)) {
      const cplx phase = std::conj(vectors(i, k)) / mag;
      for (std::size_t r = 0; r < n; ++r) vectors(r, k) *= phase;
      vectors(i, k) = mag;
      return;
    }
  }
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) { return eigh(m, kernels::active_kernels()); }

EigenDecomposition eigh(const ComplexMatrix& m, const kernels::KernelTable& kt) {
  const std::size_t n = m.dim();
  if (n == 0) throw InvalidArgument("eigh: empty matrix");
  const double defect = m.hermiticity_defect();
  if (!(defect <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "eigh: matrix is not Hermitian (max |m - m^dagger| = " << defect << ")";
    throw InvalidArgument(msg.str());
  }

  ComplexMatrix a = cplx{0.5, 0.0} * (m + m.adjoint());
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  // Rows of `basis` are the (transposed) eigenvector columns.
  ComplexMatrix basis = ComplexMatrix::identity(n);

  const double threshold = 1e-14 * std::max(1.0, frobenius(a));
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (std::sqrt(kt.offdiag_norm2(a.data(), n)) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double h = std::abs(apq);
        if (h == 0.0) continue;
        const cplx phase = apq / h;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Unitary U acts on (p, q) as [[c, -s e^{i phi}], [s e^{-i phi}, c]];
        // t = s/c is the smaller root of h(1 - t^2) + (aqq - app) t = 0.
        const double theta = (aqq - app) / (2.0 * h);
        double t;
        if (std::abs(theta) > 1e150) {
          t = -0.5 / theta;
        } else {
          t = -1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Rows: A <- U^dagger A.
        kt.rotate_rows(a.row(p).data(), a.row(q).data(), n, c, s * phase);
        // 2x2 block of (U^dagger A) U; remaining columns follow from hermiticity.
        const double new_pp = (c * a(p, p) + s * std::conj(phase) * a(p, q)).real();
        const double new_qq = (-s * phase * a(q, p) + c * a(q, q)).real();
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = std::conj(a(p, k));
          a(k, q) = std::conj(a(q, k));
        }
        a(p, p) = new_pp;
        a(q, q) = new_qq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        // Eigenvectors: V <- V U, i.e. rows of V^T.
        kt.rotate_rows(basis.row(p).data(), basis.row(q).data(), n, c, s * std::conj(phase));
      }
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "eigh: no convergence after " << kMaxJacobiSweeps << " sweeps (off-diagonal norm "
        << std::sqrt(kt.offdiag_norm2(a.data(), n)) << ")";
    throw NumericFailure(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = basis(order[k], i);
  }

  for (std::size_t first = 0; first < n;) {
    std::size_t last = first + 1;
    while (last < n && out.values[last - 1] - out.values[last] <= kDegeneracyTolerance) ++last;
    if (last - first > 1) complete_cluster(out.vectors, first, last);
    first = last;
  }
  for (std::size_t k = 0; k < n; ++k) fix_phase(out.vectors, k);
  return out;
}

// ---------------------------------------------------------------------------
// Density matrices

int QubitSet::size() const { return std::popcount(bits_); }

namespace {

int qubit_count(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim))
    throw InvalidArgument("density matrix dimension must be a power of two");
  return std::countr_zero(dim);
}

}  // namespace

int DensityMatrix::qubits() const noexcept { return std::countr_zero(m_.dim()); }

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double tol) {
  qubit_count(m.dim());
  const double defect = m.hermiticity_defect();
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw InvalidArgument(msg.str());
  }
  ComplexMatrix h = cplx{0.5, 0.0} * (m + m.adjoint());
  const double tr_err = std::abs(h.trace() - cplx{1.0, 0.0});
  if (!(tr_err <= tol)) {
    std::ostringstream msg;
    msg << "density matrix trace differs from 1 by " << tr_err;
    throw InvalidArgument(msg.str());
  }
  const double smallest = eigh(h).values.back();
  if (smallest < -tol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite (min eigenvalue " << smallest << ")";
    throw InvalidArgument(msg.str());
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::from_pure(std::span<const cplx> ket) {
  qubit_count(ket.size());
  double n2 = 0.0;
  for (const cplx& x : ket) n2 += std::norm(x);
  if (std::abs(n2 - 1.0) > kTolerance) throw InvalidArgument("from_pure: ket is not normalized");
  return DensityMatrix(ComplexMatrix::outer(ket));
}

DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet keep) {
  const int n = rho.qubits();
  const std::uint32_t all = (n >= 32) ? ~0u : ((1u << n) - 1u);
  if (keep.empty()) throw InvalidArgument("partial_trace: keep-set is empty");
  if ((keep.bits() & ~all) != 0) throw InvalidArgument("partial_trace: keep-set names a missing qubit");
  if (keep.bits() == all) throw InvalidArgument("partial_trace: keep-set covers every qubit");

  // Bit masks in index space: qubit q lives at bit (n - 1 - q).
  std::size_t kept_mask = 0;
  std::vector<int> kept_bits;  // index-space bit positions, most significant first
  for (int q = 0; q < n; ++q)
    if (keep.contains(q)) {
      kept_mask |= std::size_t{1} << (n - 1 - q);
      kept_bits.push_back(n - 1 - q);
    }
  const auto compress = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int b : kept_bits) out = (out << 1) | ((idx >> b) & 1u);
    return out;
  };

  const std::size_t dim = rho.dim();
  ComplexMatrix out(std::size_t{1} << kept_bits.size());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if ((i & ~kept_mask) == (j & ~kept_mask)) out(compress(i), compress(j)) += rho(i, j);
  return DensityMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Spectra

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("Spectrum: empty");
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= -kNegativeTolerance)) {
      std::ostringstream msg;
      msg << "Spectrum: negative eigenvalue " << v;
      throw InvalidArgument(msg.str());
    }
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= kSumTolerance)) {
    std::ostringstream msg;
    msg << "Spectrum: values sum to " << sum;
    throw InvalidArgument(msg.str());
  }
  for (double& v : values_) v = std::clamp(v, 0.0, 1.0);
}

Spectrum Spectrum::of(const DensityMatrix& rho) { return Spectrum(eigh(rho.matrix()).values); }

double xlogx_sum(std::span<const double> p, LogBase base) noexcept {
  double acc = 0.0;
  for (double x : p)
    if (x > 0.0) acc += x * log_in(x, base);
  return acc;
}

double spectral_entropy_term(const Spectrum& s, LogBase base) {
  return std::min(0.0, xlogx_sum(s.values(), base));
}

}  // namespace qdeficit
