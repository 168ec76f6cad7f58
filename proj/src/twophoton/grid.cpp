#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "chronocyclic/error.hpp"
#include "chronocyclic/gaussmodel.hpp"
#include "chronocyclic/twophoton.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {
namespace {

constexpr std::size_t kProbe = 512;
constexpr double kThreshold = 1e-2;

struct Extent {
  double signal;  // half-extent about the center, rad/s
  double idler;
};

// Half-extents of the marginals above threshold, measured from the center.
Extent probe(const Crystal& crystal, const PumpSpec& pump, const FilterSpec& filter, double center, double hs,
             double hi) {
  const FrequencyGrid grid = FrequencyGrid::centered(center, hs, kProbe, center, hi, kProbe);
  const JsaGrid jsa = apply_filter(build_jsa(crystal, pump.with_beta(0.0), grid), filter).jsa;
  std::vector<double> ms(kProbe, 0.0), mi(kProbe, 0.0);
  for (std::size_t r = 0; r < kProbe; ++r) {
    for (std::size_t c = 0; c < kProbe; ++c) {
      const double v = std::norm(jsa.amplitude(r, c));
      ms[r] += v;
      mi[c] += v;
    }
  }
  auto extent = [&](const std::vector<double>& m, const UniformAxis& axis) {
    const double peak = *std::max_element(m.begin(), m.end());
    double e = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] >= kThreshold * peak) e = std::max(e, std::abs(axis[k] - center));
    }
    return e + 2 * axis.step;
  };
  return {extent(ms, grid.signal), extent(mi, grid.idler)};
}

}  // namespace

FrequencyGrid auto_grid(const Crystal& crystal, const PumpSpec& pump, std::size_t n_signal, std::size_t n_idler,
                        const FilterSpec& filter) {
  const double center = pump.center_frequency / 2;
  // Largest detuning keeping both daughters and the summed pump inside the window.
  const IndexModel& m = crystal.index_model();
  const double w_min = units::omega_from_wavelength(m.lambda_max);
  const double w_max = units::omega_from_wavelength(m.lambda_min);
  double limit = std::min({center - w_min, w_max - center, (w_max - pump.center_frequency) / 2});
  limit *= 0.99;
  if (!(limit > 0.0)) throw DomainError("auto_grid: degenerate frequency outside the transparency window");

  const double h0 = std::min(0.4 * center, limit);
  Extent e = probe(crystal, pump, filter, center, h0, h0);
  e = probe(crystal, pump, filter, center, std::min(1.5 * e.signal, limit), std::min(1.5 * e.idler, limit));
  double hs = std::min(1.15 * e.signal, limit);
  double hi = std::min(1.15 * e.idler, limit);
  if (crystal.spec().interaction == Interaction::TypeI) hs = hi = std::max(hs, hi);
  return FrequencyGrid::centered(center, hs, n_signal, center, hi, n_idler);
}

FrequencyGrid gaussian_grid(const GaussParams& params, double signal_center, double idler_center, std::size_t n) {
  if (on_singular_line(params)) {
    throw DomainError("gaussian_grid: joint amplitude is not normalizable for tau_s = tau_i");
  }
  const double a = x_param(params, Role::Signal, Role::Signal);
  const double b = x_param(params, Role::Idler, Role::Idler);
  const double det = x_determinant(params);
  // temporal sd of one photon's intensity; the idler follows by label exchange
  auto time_sd = [](const GaussParams& p) {
    const AnalyticCwf cwf = analytic_params(p);
    return cwf.delta_t / std::sqrt(2 * (1 - cwf.chirp * cwf.chirp));
  };
  GaussParams swapped = params;
  std::swap(swapped.tau_s, swapped.tau_i);
  // Each axis spans k spectral sds. Only every other omega' node of the
  // diagonal view is exact, so the alias-free half-window is pi / (2 step),
  // holding (pi (n - 1) / 4) / (k sd) temporal sds. Balance the two, up to k = 8.
  auto half_span = [n](double sd, double sd_t) {
    const double k = std::min(8.0, std::sqrt(units::kPi * static_cast<double>(n - 1) / (4 * sd * sd_t)));
    return k * sd;
  };
  // |f|^2 marginals are Gaussians with variance b / (4 det) and a / (4 det)
  const double hs = half_span(std::sqrt(b / det) / 2, time_sd(params));
  const double hi = half_span(std::sqrt(a / det) / 2, time_sd(swapped));
  return FrequencyGrid::centered(signal_center, hs, n, idler_center, hi, n);
}

}  // namespace chronocyclic
