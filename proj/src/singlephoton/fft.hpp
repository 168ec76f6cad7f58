#pragma once

#include <complex>
#include <cstddef>

namespace chronocyclic::detail {

// In-place DFT of `howmany` contiguous rows of length n.
// sign -1: X[q] = sum_p x[p] exp(-2 pi i p q / n); sign +1 the conjugate kernel.
void fft_rows(std::complex<double>* data, std::size_t howmany, std::size_t n, int sign);

}  // namespace chronocyclic::detail
