// NEON variants for aarch64. One float64x2_t holds one complex [re, im].

#include <arm_neon.h>

#include "kernels/kernel_impl.hpp"

namespace chronocyclic::kernels::detail {
namespace {

inline float64x2_t swap_re_im(float64x2_t v) { return vextq_f64(v, v, 1); }

// p accumulates x*y lanewise, q accumulates x*swap(y); returns sum x*conj(y).
inline cplx reduce_conj(float64x2_t p, float64x2_t q) {
  return {vgetq_lane_f64(p, 0) + vgetq_lane_f64(p, 1),
          vgetq_lane_f64(q, 1) - vgetq_lane_f64(q, 0)};
}

void tile2x2(const double* x0, const double* x1, const double* y0, const double* y1,
             std::size_t cols, cplx r[4]) {
  float64x2_t p00 = vdupq_n_f64(0.0), q00 = vdupq_n_f64(0.0);
  float64x2_t p01 = vdupq_n_f64(0.0), q01 = vdupq_n_f64(0.0);
  float64x2_t p10 = vdupq_n_f64(0.0), q10 = vdupq_n_f64(0.0);
  float64x2_t p11 = vdupq_n_f64(0.0), q11 = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < cols; ++k) {
    const float64x2_t a0 = vld1q_f64(x0 + 2 * k);
    const float64x2_t a1 = vld1q_f64(x1 + 2 * k);
    const float64x2_t b0 = vld1q_f64(y0 + 2 * k);
    const float64x2_t b1 = vld1q_f64(y1 + 2 * k);
    const float64x2_t s0 = swap_re_im(b0);
    const float64x2_t s1 = swap_re_im(b1);
    p00 = vfmaq_f64(p00, a0, b0);
    q00 = vfmaq_f64(q00, a0, s0);
    p01 = vfmaq_f64(p01, a0, b1);
    q01 = vfmaq_f64(q01, a0, s1);
    p10 = vfmaq_f64(p10, a1, b0);
    q10 = vfmaq_f64(q10, a1, s0);
    p11 = vfmaq_f64(p11, a1, b1);
    q11 = vfmaq_f64(q11, a1, s1);
  }
  r[0] = reduce_conj(p00, q00);
  r[1] = reduce_conj(p01, q01);
  r[2] = reduce_conj(p10, q10);
  r[3] = reduce_conj(p11, q11);
}

}  // namespace

void gram_neon(const cplx* a, std::size_t rows, std::size_t cols, cplx* out) {
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

double sum_norm_neon(const cplx* x, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(x);
  float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t v0 = vld1q_f64(p + 2 * k);
    const float64x2_t v1 = vld1q_f64(p + 2 * k + 2);
    acc0 = vfmaq_f64(acc0, v0, v0);
    acc1 = vfmaq_f64(acc1, v1, v1);
  }
  if (k < n) {
    const float64x2_t v = vld1q_f64(p + 2 * k);
    acc0 = vfmaq_f64(acc0, v, v);
  }
  return vaddvq_f64(vaddq_f64(acc0, acc1));
}

cplx dot_neon(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t p = vdupq_n_f64(0.0), q = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t x = vld1q_f64(pa + 2 * k);
    const float64x2_t y = vld1q_f64(pb + 2 * k);
    p = vfmaq_f64(p, x, y);
    q = vfmaq_f64(q, x, swap_re_im(y));
  }
  return {vgetq_lane_f64(p, 0) - vgetq_lane_f64(p, 1), vaddvq_f64(q)};
}

}  // namespace chronocyclic::kernels::detail
