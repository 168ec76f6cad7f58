#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "chronocyclic/error.hpp"
#include "chronocyclic/singlephoton.hpp"
#include "chronocyclic/units.hpp"
#include "singlephoton/fft.hpp"

namespace chronocyclic {

namespace detail {

void fft_rows(std::complex<double>* data, std::size_t howmany, std::size_t n, int sign) {
  // the FFTW planner is not thread-safe; execution is
  static std::mutex planner;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner);
    const int len = static_cast<int>(n);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    plan = fftw_plan_many_dft(1, &len, static_cast<int>(howmany), buf, nullptr, 1, len, buf, nullptr, 1, len,
                              sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw NumericalError("FFT plan creation failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner);
  fftw_destroy_plan(plan);
}

}  // namespace detail

namespace {

// Centered transform along rows: entries indexed k = -N .. N-1 in, n - N out.
// out[n] = sum_k in[k] exp(sign i 2 pi k (n - N) / 2N)
void centered_transform(Array2D<cplx>& a, int sign) {
  const std::size_t len = a.cols(), half = len / 2;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    std::rotate(row.begin(), row.begin() + static_cast<long>(half), row.end());
  }
  detail::fft_rows(a.data(), a.rows(), len, sign);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    std::rotate(row.begin(), row.begin() + static_cast<long>(half), row.end());
  }
}

UniformAxis time_axis_for(const UniformAxis& source) {
  const std::size_t n = source.size;
  const double dt = units::kPi / (static_cast<double>(n) * source.step);
  return {-static_cast<double>(n) * dt, dt, 2 * n};
}

}  // namespace

WignerGrid wigner_from_density(const DiagonalView& dv) {
  Array2D<cplx> work = dv.rho_d;
  centered_transform(work, -1);
  const double d = dv.omega_prime_axis.step;
  const double scale = d / units::kTwoPi;

  WignerGrid w;
  w.omega_axis = dv.omega_axis;
  w.time_axis = time_axis_for(dv.source_axis);
  w.source_axis = dv.source_axis;
  w.w = Array2D<double>(work.rows(), work.cols());
  double max_re = 0, max_im = 0;
  for (std::size_t k = 0; k < work.size(); ++k) {
    const cplx v = work.data()[k] * scale;
    w.w.data()[k] = v.real();
    max_re = std::max(max_re, std::abs(v.real()));
    max_im = std::max(max_im, std::abs(v.imag()));
  }
  w.imag_residue = max_re > 0 ? max_im / max_re : 0.0;
  if (w.imag_residue > 1e-10) {
    throw NumericalError("wigner_from_density: imaginary residue " + std::to_string(w.imag_residue) +
                         " exceeds 1e-10 (density matrix is not Hermitian)");
  }
  return w;
}

DiagonalView density_from_wigner(const WignerGrid& w) {
  const std::size_t n = w.source_axis.size;
  if (w.w.rows() != 2 * n + 1 || w.w.cols() != 2 * n || w.time_axis.size != 2 * n) {
    throw ContractError("density_from_wigner: Wigner grid axes do not match its source axis");
  }
  Array2D<cplx> work(w.w.rows(), w.w.cols());
  for (std::size_t k = 0; k < work.size(); ++k) work.data()[k] = w.w.data()[k];
  centered_transform(work, +1);
  const double dt = w.time_axis.step;
  for (cplx& v : work.flat()) v *= dt;

  DiagonalView dv;
  dv.source_axis = w.source_axis;
  dv.omega_axis = w.omega_axis;
  const double d = w.source_axis.step;
  dv.omega_prime_axis = {-static_cast<double>(n) * d, d, 2 * n};
  dv.rho_d = std::move(work);
  return dv;
}

std::vector<double> WignerGrid::spectral_marginal() const {
  std::vector<double> out(w.rows(), 0.0);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    double s = 0;
    for (double v : w.row(r)) s += v;
    out[r] = s * time_axis.step;
  }
  return out;
}

std::vector<double> WignerGrid::temporal_marginal() const {
  std::vector<double> out(w.cols(), 0.0);
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const auto row = w.row(r);
    for (std::size_t c = 0; c < w.cols(); ++c) out[c] += row[c];
  }
  for (double& v : out) v *= omega_axis.step;
  return out;
}

double WignerGrid::integral() const {
  double s = 0;
  for (double v : w.flat()) s += v;
  return s * omega_axis.step * time_axis.step;
}

namespace {
// A(w') = sum_w rho_d(w, w') dw
std::vector<cplx> column_sums(const DiagonalView& dv) {
  std::vector<cplx> a(dv.rho_d.cols(), cplx{});
  for (std::size_t r = 0; r < dv.rho_d.rows(); ++r) {
    const auto row = dv.rho_d.row(r);
    for (std::size_t c = 0; c < a.size(); ++c) a[c] += row[c];
  }
  for (cplx& v : a) v *= dv.omega_axis.step;
  return a;
}
}  // namespace

TemporalProfile temporal_intensity(const DiagonalView& dv) {
  Array2D<cplx> a(1, dv.rho_d.cols());
  const std::vector<cplx> sums = column_sums(dv);
  std::copy(sums.begin(), sums.end(), a.data());
  centered_transform(a, -1);
  const double scale = dv.omega_prime_axis.step / units::kTwoPi;
  TemporalProfile out{time_axis_for(dv.source_axis), std::vector<double>(a.cols())};
  for (std::size_t c = 0; c < a.cols(); ++c) out.intensity[c] = a(0, c).real() * scale;
  return out;
}

double antidiagonal_width(const DiagonalView& dv) {
  const std::vector<cplx> a = column_sums(dv);
  double m0 = 0, m2 = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double wp = dv.omega_prime_axis[c];
    const double v = std::abs(a[c]);
    m0 += v;
    m2 += v * wp * wp;
  }
  if (!(m0 > 0)) throw NumericalError("antidiagonal_width: density matrix is zero");
  return std::sqrt(2 * m2 / m0);
}

}  // namespace chronocyclic
