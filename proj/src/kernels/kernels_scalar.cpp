#include "qdeficit/kernels.hpp"

#include <cmath>

namespace qdeficit::kernels {
namespace {

void rotate_rows_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx beta) {
  const cplx beta_conj = std::conj(beta);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx xk = x[k];
    const cplx yk = y[k];
    x[k] = c * xk + beta * yk;
    y[k] = c * yk - beta_conj * xk;
  }
}

double hermitian_form_scalar(const cplx* m, const cplx* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) row += m[i * n + j] * v[j];
    acc += (std::conj(v[i]) * row).real();
  }
  return acc;
}

double offdiag_norm2_scalar(const cplx* m, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) acc += std::norm(m[i * n + j]);
  return acc;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar", &rotate_rows_scalar, &hermitian_form_scalar,
                                 &offdiag_norm2_scalar};
  return table;
}

}  // namespace qdeficit::kernels
