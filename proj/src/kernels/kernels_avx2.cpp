// AVX2 + FMA variants. Complex numbers are kept interleaved: one __m256d holds
// two of them as [re0, im0, re1, im1].

#include <immintrin.h>

#include "kernels/kernel_impl.hpp"

namespace chronocyclic::kernels::detail {
namespace {

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0x5); }

inline __m128d fold(__m256d v) {
  return _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
}

// p accumulates x*y lanewise, q accumulates x*swap(y); returns sum x*conj(y).
inline cplx reduce_conj(__m256d p, __m256d q) {
  const __m128d ps = fold(p);
  const __m128d qs = fold(q);
  const double re = _mm_cvtsd_f64(ps) + _mm_cvtsd_f64(_mm_unpackhi_pd(ps, ps));
  const double im = _mm_cvtsd_f64(_mm_unpackhi_pd(qs, qs)) - _mm_cvtsd_f64(qs);
  return {re, im};
}

// 2x2 tile: rows x0, x1 against rows y0, y1 of the input.
void tile2x2(const double* x0, const double* x1, const double* y0, const double* y1,
             std::size_t cols, cplx r[4]) {
  __m256d p00 = _mm256_setzero_pd(), q00 = _mm256_setzero_pd();
  __m256d p01 = _mm256_setzero_pd(), q01 = _mm256_setzero_pd();
  __m256d p10 = _mm256_setzero_pd(), q10 = _mm256_setzero_pd();
  __m256d p11 = _mm256_setzero_pd(), q11 = _mm256_setzero_pd();
  const std::size_t even = cols & ~std::size_t{1};
  for (std::size_t k = 0; k < even; k += 2) {
    const __m256d a0 = _mm256_loadu_pd(x0 + 2 * k);
    const __m256d a1 = _mm256_loadu_pd(x1 + 2 * k);
    const __m256d b0 = _mm256_loadu_pd(y0 + 2 * k);
    const __m256d b1 = _mm256_loadu_pd(y1 + 2 * k);
    const __m256d s0 = swap_re_im(b0);
    const __m256d s1 = swap_re_im(b1);
    p00 = _mm256_fmadd_pd(a0, b0, p00);
    q00 = _mm256_fmadd_pd(a0, s0, q00);
    p01 = _mm256_fmadd_pd(a0, b1, p01);
    q01 = _mm256_fmadd_pd(a0, s1, q01);
    p10 = _mm256_fmadd_pd(a1, b0, p10);
    q10 = _mm256_fmadd_pd(a1, s0, q10);
    p11 = _mm256_fmadd_pd(a1, b1, p11);
    q11 = _mm256_fmadd_pd(a1, s1, q11);
  }
  r[0] = reduce_conj(p00, q00);
  r[1] = reduce_conj(p01, q01);
  r[2] = reduce_conj(p10, q10);
  r[3] = reduce_conj(p11, q11);
  if (even != cols) {
    const std::size_t k = even;
    const cplx a0(x0[2 * k], x0[2 * k + 1]), a1(x1[2 * k], x1[2 * k + 1]);
    const cplx b0(y0[2 * k], y0[2 * k + 1]), b1(y1[2 * k], y1[2 * k + 1]);
    r[0] += a0 * std::conj(b0);
    r[1] += a0 * std::conj(b1);
    r[2] += a1 * std::conj(b0);
    r[3] += a1 * std::conj(b1);
  }
}

}  // namespace

void gram_avx2(const cplx* a, std::size_t rows, std::size_t cols, cplx* out) {
  const double* base = reinterpret_cast<const double*>(a);
  auto row = [&](std::size_t i) { return base + 2 * i * cols; };
  for (std::size_t i = 0; i < rows; i += 2) {
    const std::size_t i1 = (i + 1 < rows) ? i + 1 : i;
    for (std::size_t j = 0; j <= i; j += 2) {
      const std::size_t j1 = (j + 1 < rows) ? j + 1 : j;
      cplx r[4];
      tile2x2(row(i), row(i1), row(j), row(j1), cols, r);
      out[i * rows + j] = r[0];
      if (j + 1 <= i) out[i * rows + j + 1] = r[1];
      if (i + 1 < rows) {
        out[(i + 1) * rows + j] = r[2];
        if (j + 1 < rows) out[(i + 1) * rows + j + 1] = r[3];
      }
    }
  }
  mirror_lower(rows, out);
}

double sum_norm_avx2(const cplx* x, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(x);
  const std::size_t len = 2 * n;
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd(), acc3 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 16 <= len; k += 16) {
    const __m256d v0 = _mm256_loadu_pd(p + k);
    const __m256d v1 = _mm256_loadu_pd(p + k + 4);
    const __m256d v2 = _mm256_loadu_pd(p + k + 8);
    const __m256d v3 = _mm256_loadu_pd(p + k + 12);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    acc2 = _mm256_fmadd_pd(v2, v2, acc2);
    acc3 = _mm256_fmadd_pd(v3, v3, acc3);
  }
  for (; k + 4 <= len; k += 4) {
    const __m256d v = _mm256_loadu_pd(p + k);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  const __m256d acc = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  const __m128d s = fold(acc);
  double total = _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
  for (; k < len; ++k) total += p[k] * p[k];
  return total;
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d p0 = _mm256_setzero_pd(), q0 = _mm256_setzero_pd();
  __m256d p1 = _mm256_setzero_pd(), q1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d x0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d y0 = _mm256_loadu_pd(pb + 2 * k);
    const __m256d x1 = _mm256_loadu_pd(pa + 2 * k + 4);
    const __m256d y1 = _mm256_loadu_pd(pb + 2 * k + 4);
    p0 = _mm256_fmadd_pd(x0, y0, p0);
    q0 = _mm256_fmadd_pd(x0, swap_re_im(y0), q0);
    p1 = _mm256_fmadd_pd(x1, y1, p1);
    q1 = _mm256_fmadd_pd(x1, swap_re_im(y1), q1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d x0 = _mm256_loadu_pd(pa + 2 * k);
    const __m256d y0 = _mm256_loadu_pd(pb + 2 * k);
    p0 = _mm256_fmadd_pd(x0, y0, p0);
    q0 = _mm256_fmadd_pd(x0, swap_re_im(y0), q0);
  }
  // p lanes [ar*br, ai*bi, ...], q lanes [ar*bi, ai*br, ...]
  const __m128d ps = fold(_mm256_add_pd(p0, p1));
  const __m128d qs = fold(_mm256_add_pd(q0, q1));
  double re = _mm_cvtsd_f64(ps) - _mm_cvtsd_f64(_mm_unpackhi_pd(ps, ps));
  double im = _mm_cvtsd_f64(qs) + _mm_cvtsd_f64(_mm_unpackhi_pd(qs, qs));
  for (; k < n; ++k) {
    const cplx t = a[k] * b[k];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

}  // namespace chronocyclic::kernels::detail
