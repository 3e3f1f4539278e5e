// Compiled with -mavx2 -mfma. Only reached through avx2_kernels(), which checks
// CPU support first.

#include "qdeficit/kernels.hpp"

#include <immintrin.h>

namespace qdeficit::kernels {

namespace {

// Two complex doubles per register, interleaved (re0, im0, re1, im1).
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

// (a * b) for two packed complex pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, swap_re_im(b)));
}

void rotate_rows_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx beta) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d br = _mm256_set1_pd(beta.real());
  const __m256d bi = _mm256_set1_pd(beta.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    // beta*y = (br*yr - bi*yi, br*yi + bi*yr)
    const __m256d beta_y = _mm256_fmaddsub_pd(br, yv, _mm256_mul_pd(bi, swap_re_im(yv)));
    // c*y - conj(beta)*x = (c*yr - br*xr - bi*xi, c*yi - br*xi + bi*xr)
    const __m256d cy_brx = _mm256_fnmadd_pd(br, xv, _mm256_mul_pd(vc, yv));
    const __m256d new_y = _mm256_addsub_pd(cy_brx, _mm256_mul_pd(bi, swap_re_im(xv)));
    store2(x + k, _mm256_fmadd_pd(vc, xv, beta_y));
    store2(y + k, new_y);
  }
  const cplx beta_conj = std::conj(beta);
  for (; k < n; ++k) {
    const cplx xk = x[k];
    const cplx yk = y[k];
    x[k] = c * xk + beta * yk;
    y[k] = c * yk - beta_conj * xk;
  }
}

double hermitian_form_avx2(const cplx* m, const cplx* v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = m + i * n;
    __m256d sum = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) sum = _mm256_add_pd(sum, cmul(load2(row + j), load2(v + j)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, sum);
    cplx dot{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    for (; j < n; ++j) dot += row[j] * v[j];
    acc += (std::conj(v[i]) * dot).real();
  }
  return acc;
}

// Sum of |v_k|^2 over a contiguous run.
double norm2_run(const cplx* v, std::size_t len) {
  __m256d sum = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    const __m256d x = load2(v + k);
    sum = _mm256_fmadd_pd(x, x, sum);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, sum);
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < len; ++k) acc += std::norm(v[k]);
  return acc;
}

double offdiag_norm2_avx2(const cplx* m, std::size_t n) {
  // Row i contributes [0, i) and (i, n); the diagonal is never summed.
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = m + i * n;
    acc += norm2_run(row, i) + norm2_run(row + i + 1, n - i - 1);
  }
  return acc;
}

}  // namespace

const KernelTable& avx2_kernel_table() noexcept {
  static const KernelTable table{"avx2", &rotate_rows_avx2, &hermitian_form_avx2,
                                 &offdiag_norm2_avx2};
  return table;
}

}  // namespace qdeficit::kernels
