#include "kernels/kernel_impl.hpp"

namespace chronocyclic::kernels::detail {

void gram_scalar(const cplx* a, std::size_t rows, std::size_t cols, cplx* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = reinterpret_cast<const double*>(a + i * cols);
    for (std::size_t j = 0; j <= i; ++j) {
      const double* aj = reinterpret_cast<const double*>(a + j * cols);
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < cols; ++k) {
        const double xr = ai[2 * k], xi = ai[2 * k + 1];
        const double yr = aj[2 * k], yi = aj[2 * k + 1];
        re += xr * yr + xi * yi;
        im += xi * yr - xr * yi;
      }
      out[i * rows + j] = cplx(re, im);
    }
  }
  mirror_lower(rows, out);
}

double sum_norm_scalar(const cplx* x, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(x);
  double acc = 0.0;
  for (std::size_t k = 0; k < 2 * n; ++k) acc += p[k] * p[k];
  return acc;
}

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = pa[2 * k], ai = pa[2 * k + 1];
    const double br = pb[2 * k], bi = pb[2 * k + 1];
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

}  // namespace chronocyclic::kernels::detail
