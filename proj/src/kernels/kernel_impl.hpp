#pragma once

#include "chronocyclic/kernels.hpp"

namespace chronocyclic::kernels::detail {

void gram_scalar(const cplx* a, std::size_t rows, std::size_t cols, cplx* out);
double sum_norm_scalar(const cplx* x, std::size_t n);
cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n);

#if defined(CHRONOCYCLIC_HAVE_AVX2_TU)
void gram_avx2(const cplx* a, std::size_t rows, std::size_t cols, cplx* out);
double sum_norm_avx2(const cplx* x, std::size_t n);
cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n);
#endif

#if defined(CHRONOCYCLIC_HAVE_NEON_TU)
void gram_neon(const cplx* a, std::size_t rows, std::size_t cols, cplx* out);
double sum_norm_neon(const cplx* x, std::size_t n);
cplx dot_neon(const cplx* a, const cplx* b, std::size_t n);
#endif

// Fills the strict upper triangle from the lower one and pins the diagonal real.
inline void mirror_lower(std::size_t rows, cplx* out) {
  for (std::size_t i = 0; i < rows; ++i) {
    out[i * rows + i] = cplx(out[i * rows + i].real(), 0.0);
    for (std::size_t j = 0; j < i; ++j) out[j * rows + i] = std::conj(out[i * rows + j]);
  }
}

}  // namespace chronocyclic::kernels::detail
