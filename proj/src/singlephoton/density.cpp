#include <algorithm>
#include <cmath>

#include "chronocyclic/error.hpp"
#include "chronocyclic/kernels.hpp"
#include "chronocyclic/singlephoton.hpp"

namespace chronocyclic {

double DensityMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < rho.rows(); ++i) t += rho(i, i).real();
  return t * axis.step;
}

DensityMatrix reduce_density(const JsaGrid& jsa) {
  if (!jsa.normalized) throw ContractError("reduce_density: joint amplitude is not normalized");
  const std::size_t n = jsa.amplitude.rows(), m = jsa.amplitude.cols();
  DensityMatrix dm{jsa.grid.signal, Array2D<cplx>(n, n), true};
  kernels::hermitian_gram(jsa.amplitude.flat(), n, m, dm.rho.flat());
  const double di = jsa.grid.idler.step;
  for (cplx& v : dm.rho.flat()) v *= di;
  return dm;
}

DensityMatrix reduce_idler_density(const JsaGrid& jsa) {
  JsaGrid swapped{{jsa.grid.idler, jsa.grid.signal},
                  Array2D<cplx>(jsa.amplitude.cols(), jsa.amplitude.rows()),
                  jsa.normalized};
  for (std::size_t r = 0; r < jsa.amplitude.rows(); ++r) {
    for (std::size_t c = 0; c < jsa.amplitude.cols(); ++c) swapped.amplitude(c, r) = jsa.amplitude(r, c);
  }
  return reduce_density(swapped);
}

DiagonalView to_diagonal_view(const DensityMatrix& dm) {
  const std::size_t n = dm.axis.size;
  if (dm.rho.rows() != n || dm.rho.cols() != n) throw ContractError("to_diagonal_view: matrix is not square on its axis");
  const double d = dm.axis.step;
  DiagonalView dv;
  dv.source_axis = dm.axis;
  dv.omega_axis = {dm.axis.start - d / 2, d / 2, 2 * n + 1};
  dv.omega_prime_axis = {-static_cast<double>(n) * d, d, 2 * n};
  dv.rho_d = Array2D<cplx>(2 * n + 1, 2 * n);

  // row r <-> m = r - 1, column c <-> k = c - n
  const auto N = static_cast<long>(n);
  for (long i1 = 0; i1 < N; ++i1) {
    for (long i2 = 0; i2 < N; ++i2) {
      dv.rho_d(static_cast<std::size_t>(i1 + i2 + 1), static_cast<std::size_t>(i1 - i2 + N)) = dm.rho(i1, i2);
    }
  }
  const std::size_t rows = 2 * n + 1;
  for (std::size_t r = 0; r < rows; ++r) {
    const long m = static_cast<long>(r) - 1;
    for (long k = -N; k < N; ++k) {
      if (((m + k) & 1) == 0) continue;
      const std::size_t c = static_cast<std::size_t>(k + N);
      const cplx below = r > 0 ? dv.rho_d(r - 1, c) : cplx{};
      const cplx above = r + 1 < rows ? dv.rho_d(r + 1, c) : cplx{};
      dv.rho_d(r, c) = 0.5 * (below + above);
    }
  }
  return dv;
}

DensityMatrix from_diagonal_view(const DiagonalView& dv) {
  const std::size_t n = dv.n();
  if (dv.rho_d.rows() != 2 * n + 1 || dv.rho_d.cols() != 2 * n) {
    throw ContractError("from_diagonal_view: diagonal view does not match its source axis");
  }
  DensityMatrix dm{dv.source_axis, Array2D<cplx>(n, n), true};
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) dm.rho(i1, i2) = dv.rho_d(i1 + i2 + 1, i1 + n - i2);
  }
  return dm;
}

double purity_trace(const DensityMatrix& dm) {
  const double d = dm.axis.step;
  return kernels::sum_norm(dm.rho.flat()) * d * d;
}

std::vector<double> spectral_intensity(const DensityMatrix& dm) {
  std::vector<double> out(dm.axis.size);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dm.rho(i, i).real();
  return out;
}

Array2D<cplx> spectral_coherence(const DensityMatrix& dm) {
  Array2D<cplx> s(dm.rho.rows(), dm.rho.cols());
  for (std::size_t k = 0; k < s.size(); ++k) s.data()[k] = std::conj(dm.rho.data()[k]);
  return s;
}

double fwhm(const UniformAxis& axis, const std::vector<double>& values) {
  if (values.size() != axis.size || values.size() < 3) throw ContractError("fwhm: profile does not match axis");
  const auto peak_it = std::max_element(values.begin(), values.end());
  const double half = 0.5 * *peak_it;
  std::size_t lo = 0, hi = values.size() - 1;
  while (lo < values.size() && values[lo] < half) ++lo;
  while (hi > 0 && values[hi] < half) --hi;
  if (lo == 0 || hi == values.size() - 1) throw NumericalError("fwhm: profile does not fall below half maximum inside the axis");
  auto cross = [&](std::size_t below, std::size_t above) {
    const double f = (half - values[below]) / (values[above] - values[below]);
    return axis[below] + f * (axis[above] - axis[below]);
  };
  return cross(hi + 1, hi) - cross(lo - 1, lo);
}

}  // namespace chronocyclic
