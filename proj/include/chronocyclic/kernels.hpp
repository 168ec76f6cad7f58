#pragma once

// Hot inner loops with a scalar reference and vectorized variants picked at
// runtime from the host CPU. Set CHRONOCYCLIC_ISA=scalar|avx2|neon to pin one.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace chronocyclic::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  // out[i*rows + j] = sum_k a[i*cols + k] * conj(a[j*cols + k]); exact Hermitian result.
  void (*hermitian_gram)(const cplx* a, std::size_t rows, std::size_t cols, cplx* out);
  // sum_k |x_k|^2
  double (*sum_norm)(const cplx* x, std::size_t n);
  // sum_k a_k * b_k (no conjugation)
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
};

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();

// Table for a specific ISA; throws ContractError if unsupported on this host.
const KernelTable& table_for(Isa isa);
// Table chosen once per process (environment override, then best supported).
const KernelTable& active();

void hermitian_gram(std::span<const cplx> a, std::size_t rows, std::size_t cols, std::span<cplx> out);
double sum_norm(std::span<const cplx> x);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace chronocyclic::kernels
