#pragma once

// Shared builders for the unit and acceptance tests.

#include <cmath>
#include <string>

#include "chronocyclic/gaussmodel.hpp"
#include "chronocyclic/presets.hpp"
#include "chronocyclic/singlephoton.hpp"
#include "chronocyclic/twophoton.hpp"
#include "chronocyclic/units.hpp"

namespace fixtures {

using namespace chronocyclic;

inline JsaGrid preset_jsa(const std::string& name, double beta, std::size_t n = 512, const FilterSpec& filter = {}) {
  const SourcePreset& p = find_preset(name);
  const Crystal c = p.make_crystal();
  const PumpSpec pump = p.pump(beta);
  JsaGrid jsa = build_jsa(c, pump, auto_grid(c, pump, n, n, filter));
  if (std::isfinite(filter.intensity_fwhm)) jsa = apply_filter(jsa, filter).jsa;
  return jsa;
}

// 100 nm intensity FWHM at the degenerate wavelength, on both photons.
inline FilterSpec hundred_nm_filter(const std::string& name) {
  const SourcePreset& p = find_preset(name);
  const double lambda = 2 * p.pump_wavelength;
  const double w0 = units::omega_from_wavelength(lambda);
  return {w0, w0 * 100 * units::nm / lambda, FilterTarget::Both};
}

// Normalized joint amplitude from a callable f(ws, wi) on square grids.
template <class F>
JsaGrid toy_jsa(double center, double half_span, std::size_t n, F&& f) {
  JsaGrid jsa{FrequencyGrid::centered(center, half_span, n, center, half_span, n), Array2D<cplx>(n, n), false};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) jsa.amplitude(r, c) = f(jsa.grid.signal[r], jsa.grid.idler[c]);
  }
  normalize(jsa);
  return jsa;
}

// Gaussian-model parameters of a preset at the given chirp.
inline GaussParams preset_gauss(const std::string& name, double beta) {
  const SourcePreset& p = find_preset(name);
  const PumpSpec pump = p.pump(beta);
  return GaussParams::from(pump, gvm_params(p.make_crystal(), pump.center_frequency));
}

// Gaussian joint amplitude pushed through the numeric pipeline.
struct GaussNumeric {
  GaussParams params;
  JsaGrid jsa;
  DensityMatrix dm;
  DiagonalView dv;
  WignerGrid wigner;
  CwfMoments moments;
  double purity = 0;
};

inline GaussNumeric gauss_numeric(const GaussParams& params, std::size_t n) {
  GaussNumeric g{params, {}, {}, {}, {}, {}, 0};
  const double wc = 1e15;  // any carrier; the model works in detunings
  g.jsa = gaussian_jsa(params, gaussian_grid(params, wc, wc, n), wc, wc);
  g.dm = reduce_density(g.jsa);
  g.dv = to_diagonal_view(g.dm);
  g.wigner = wigner_from_density(g.dv);
  g.moments = cwf_moments(g.wigner);
  g.purity = purity_trace(g.dm);
  return g;
}

inline double max_abs(const Array2D<cplx>& a) {
  double m = 0;
  for (const cplx& v : a.flat()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fixtures
