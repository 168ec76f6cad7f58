#include <algorithm>
#include <cmath>

#include "chronocyclic/error.hpp"
#include "chronocyclic/kernels.hpp"
#include "chronocyclic/singlephoton.hpp"
#include "chronocyclic/units.hpp"
#include "singlephoton/fft.hpp"

namespace chronocyclic {
namespace {

std::vector<cplx> phasors(const UniformAxis& axis, double t, double sign) {
  std::vector<cplx> p(axis.size);
  for (std::size_t k = 0; k < axis.size; ++k) p[k] = std::polar(1.0, sign * axis[k] * t);
  return p;
}

// G(w_m, s) = sum_k rho_d(w_m, w'_k) exp(-i w'_k s) dw'
std::vector<cplx> midpoint_transform(const DiagonalView& dv, double s) {
  const std::vector<cplx> ph = phasors(dv.omega_prime_axis, s, -1.0);
  std::vector<cplx> g(dv.rho_d.rows());
  const double d = dv.omega_prime_axis.step;
  for (std::size_t r = 0; r < g.size(); ++r) g[r] = kernels::dot(dv.rho_d.row(r), ph) * d;
  return g;
}

// sum_m g_m exp(i w_m lag) dw
cplx lag_transform(const std::vector<cplx>& g, const UniformAxis& omega, double lag) {
  return kernels::dot(g, phasors(omega, lag, +1.0)) * omega.step;
}

void check_square(const UniformAxis& axis) {
  if (axis.size < 1) throw ContractError("coherence: empty time axis");
}

}  // namespace

CoherenceGrid temporal_coherence(const DiagonalView& dv, const UniformAxis& time_axis) {
  check_square(time_axis);
  const std::size_t n = time_axis.size;
  CoherenceGrid out{time_axis, time_axis, Array2D<cplx>(n, n)};
  // group pairs by midpoint index i + j so each G column is built once
  for (std::size_t sum = 0; sum + 1 < 2 * n; ++sum) {
    const double mid = time_axis[0] + 0.5 * static_cast<double>(sum) * time_axis.step;
    const std::vector<cplx> g = midpoint_transform(dv, mid);
    const std::size_t i_lo = sum >= n ? sum - (n - 1) : 0;
    const std::size_t i_hi = std::min(sum, n - 1);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const std::size_t j = sum - i;
      if (j > i) continue;
      const double lag = time_axis[i] - time_axis[j];
      const cplx v = lag_transform(g, dv.omega_axis, lag);
      out.gamma(i, j) = v;
      out.gamma(j, i) = std::conj(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.gamma(i, i) = cplx(out.gamma(i, i).real(), 0.0);
  return out;
}

UniformAxis coherence_axis(const WignerGrid& w, std::size_t points, std::size_t stride) {
  if (points < 2 || stride < 1) throw ContractError("coherence_axis: need at least two points and stride >= 1");
  const double step = 2.0 * static_cast<double>(stride) * w.time_axis.step;
  return {-static_cast<double>(points / 2) * step, step, points};
}

CoherenceGrid coherence_from_wigner(const WignerGrid& w, const UniformAxis& time_axis) {
  check_square(time_axis);
  const double dt = w.time_axis.step;
  const std::size_t n = time_axis.size;
  CoherenceGrid out{time_axis, time_axis, Array2D<cplx>(n, n)};
  std::vector<cplx> column(w.w.rows());
  for (std::size_t sum = 0; sum + 1 < 2 * n; ++sum) {
    const double mid = time_axis[0] + 0.5 * static_cast<double>(sum) * time_axis.step;
    const double pos = (mid - w.time_axis.start) / dt;
    const double idx = std::round(pos);
    if (std::abs(pos - idx) > 1e-6 || idx < 0 || idx >= static_cast<double>(w.time_axis.size)) {
      throw ContractError("coherence_from_wigner: pair midpoints are not on the Wigner time lattice");
    }
    const auto c = static_cast<std::size_t>(idx);
    for (std::size_t r = 0; r < column.size(); ++r) column[r] = w.w(r, c);
    const std::size_t i_lo = sum >= n ? sum - (n - 1) : 0;
    const std::size_t i_hi = std::min(sum, n - 1);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const std::size_t j = sum - i;
      const double lag = time_axis[i] - time_axis[j];
      out.gamma(i, j) = units::kTwoPi * lag_transform(column, w.omega_axis, lag);
    }
  }
  return out;
}

Array2D<double> wigner_from_temporal_coherence(const DiagonalView& dv, const std::vector<std::size_t>& time_indices) {
  const std::size_t n = dv.n();
  const std::size_t rows = dv.rho_d.rows();
  const double d = dv.source_axis.step;
  const double dt = units::kPi / (static_cast<double>(n) * d);
  const std::size_t lags = 2 * n + 1;
  const double dlag = 4 * units::kPi / (static_cast<double>(lags) * d);
  const auto half = static_cast<long>(lags / 2);

  Array2D<double> out(time_indices.size(), rows);
  std::vector<cplx> gamma(lags);
  for (std::size_t q = 0; q < time_indices.size(); ++q) {
    const double t = (static_cast<double>(time_indices[q]) - static_cast<double>(n)) * dt;
    // rho_T(t - l/2, t + l/2) = conj Gamma(t - l/2, t + l/2) = Gamma(t + l/2, t - l/2)
    const std::vector<cplx> g = midpoint_transform(dv, t);
    for (std::size_t l = 0; l < lags; ++l) {
      const double lag = static_cast<double>(static_cast<long>(l) - half) * dlag;
      gamma[l] = lag_transform(g, dv.omega_axis, lag);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const double omega = dv.omega_axis[r];
      cplx acc{};
      for (std::size_t l = 0; l < lags; ++l) {
        const double lag = static_cast<double>(static_cast<long>(l) - half) * dlag;
        acc += gamma[l] * std::polar(1.0, -omega * lag);
      }
      out(q, r) = (acc * dlag).real() / (4 * units::kPi * units::kPi);
    }
  }
  return out;
}

StationarityReport stationarity_residual(const DiagonalView& dv, std::size_t time_samples, std::size_t lag_samples) {
  if (time_samples < 2 || lag_samples < 3) throw ContractError("stationarity_residual: too few samples");
  const TemporalProfile it = temporal_intensity(dv);
  const auto peak_it = std::max_element(it.intensity.begin(), it.intensity.end());
  const double half = 0.5 * *peak_it;
  std::size_t lo = static_cast<std::size_t>(peak_it - it.intensity.begin()), hi = lo;
  while (lo > 0 && it.intensity[lo - 1] >= half) --lo;
  while (hi + 1 < it.intensity.size() && it.intensity[hi + 1] >= half) ++hi;

  StationarityReport rep;
  rep.core_start = it.time_axis[lo];
  rep.core_end = it.time_axis[hi];

  // stationary form from the spectral intensity (omega' = 0 column)
  const std::size_t c0 = dv.rho_d.cols() / 2;
  std::vector<cplx> spectrum(dv.rho_d.rows());
  double total = 0, mean = 0;
  for (std::size_t r = 0; r < spectrum.size(); ++r) {
    spectrum[r] = dv.rho_d(r, c0).real();
    total += spectrum[r].real();
    mean += spectrum[r].real() * dv.omega_axis[r];
  }
  mean /= total;
  double var = 0;
  for (std::size_t r = 0; r < spectrum.size(); ++r) {
    var += spectrum[r].real() * (dv.omega_axis[r] - mean) * (dv.omega_axis[r] - mean);
  }
  rep.coherence_time = 1.0 / std::sqrt(var / total);
  const double lag_max = 3 * rep.coherence_time;

  // Gamma(t, t) = sum_k A_k exp(-i w'_k t) dw' with A the omega-integrated column sums
  std::vector<cplx> colsum(dv.rho_d.cols(), cplx{});
  for (std::size_t r = 0; r < dv.rho_d.rows(); ++r) {
    for (std::size_t c = 0; c < colsum.size(); ++c) colsum[c] += dv.rho_d(r, c);
  }
  const double dw = dv.omega_axis.step, dwp = dv.omega_prime_axis.step;
  auto gamma_diag = [&](double t) {
    return (kernels::dot(colsum, phasors(dv.omega_prime_axis, t, -1.0)) * dw * dwp).real();
  };

  double residual = 0;
  for (std::size_t si = 0; si < time_samples; ++si) {
    const double s = rep.core_start + (rep.core_end - rep.core_start) * static_cast<double>(si) /
                                          static_cast<double>(time_samples - 1);
    const std::vector<cplx> g = midpoint_transform(dv, s);
    for (std::size_t li = 0; li < lag_samples; ++li) {
      const double lag = -lag_max + 2 * lag_max * static_cast<double>(li) / static_cast<double>(lag_samples - 1);
      const double t1 = s + lag / 2, t2 = s - lag / 2;
      if (std::min(t1, t2) < rep.core_start || std::max(t1, t2) > rep.core_end) continue;
      const cplx gamma = lag_transform(g, dv.omega_axis, lag);
      const double norm = std::sqrt(gamma_diag(t1) * gamma_diag(t2));
      const cplx stationary = lag_transform(spectrum, dv.omega_axis, lag) / (total * dw);
      residual = std::max(residual, std::abs(gamma / norm - stationary));
    }
  }
  rep.residual = residual;
  return rep;
}

}  // namespace chronocyclic
