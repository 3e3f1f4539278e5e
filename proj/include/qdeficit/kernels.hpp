#pragma once

// Inner-loop kernels for the small dense complex matrices used by the
// eigensolver and the decoherence step. A portable scalar reference table is
// always available; an AVX2+FMA table is compiled separately and picked at
// runtime when the CPU supports it.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qdeficit::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // x <- c*x + beta*y,  y <- c*y - conj(beta)*x   (n contiguous entries)
  void (*rotate_rows)(cplx* x, cplx* y, std::size_t n, double c, cplx beta);

  // Re <v|M|v> for row-major n x n matrix m.
  double (*hermitian_form)(const cplx* m, const cplx* v, std::size_t n);

  // Sum of |m_ij|^2 over i != j for row-major n x n matrix m.
  double (*offdiag_norm2)(const cplx* m, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels() noexcept;

// Table used by the library. AVX2 when available, unless the environment
// variable QDEFICIT_KERNELS=scalar forces the reference path.
const KernelTable& active_kernels() noexcept;

}  // namespace qdeficit::kernels
