#include <cstdlib>
#include <string>

#include "chronocyclic/error.hpp"
#include "kernels/kernel_impl.hpp"

namespace chronocyclic::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, detail::gram_scalar, detail::sum_norm_scalar,
                              detail::dot_scalar};
#if defined(CHRONOCYCLIC_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::Avx2, detail::gram_avx2, detail::sum_norm_avx2, detail::dot_avx2};
#endif
#if defined(CHRONOCYCLIC_HAVE_NEON_TU)
constexpr KernelTable kNeon{Isa::Neon, detail::gram_neon, detail::sum_norm_neon, detail::dot_neon};
#endif

const KernelTable& choose() {
  if (const char* env = std::getenv("CHRONOCYCLIC_ISA"); env != nullptr && *env != '\0') {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa)) return table_for(isa);
    }
    throw UsageError("CHRONOCYCLIC_ISA: unknown value '" + want + "' (scalar, avx2, neon)");
  }
  if (isa_supported(Isa::Avx2)) return table_for(Isa::Avx2);
  if (isa_supported(Isa::Neon)) return table_for(Isa::Neon);
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(CHRONOCYCLIC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(CHRONOCYCLIC_HAVE_NEON_TU)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw ContractError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available on this host");
  }
  switch (isa) {
#if defined(CHRONOCYCLIC_HAVE_AVX2_TU)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(CHRONOCYCLIC_HAVE_NEON_TU)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& active() {
  static const KernelTable& table = choose();
  return table;
}

void hermitian_gram(std::span<const cplx> a, std::size_t rows, std::size_t cols, std::span<cplx> out) {
  if (a.size() != rows * cols || out.size() != rows * rows) {
    throw ContractError("hermitian_gram: buffer sizes do not match rows/cols");
  }
  active().hermitian_gram(a.data(), rows, cols, out.data());
}

double sum_norm(std::span<const cplx> x) { return active().sum_norm(x.data(), x.size()); }

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ContractError("dot: length mismatch");
  return active().dot(a.data(), b.data(), a.size());
}

}  // namespace chronocyclic::kernels
