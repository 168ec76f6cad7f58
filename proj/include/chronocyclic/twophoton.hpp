#pragma once

// Joint spectral amplitude of the photon pair: phasematching function times
// chirped pump envelope, sampled on a rectangular frequency grid.

#include <cstddef>
#include <limits>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/grid.hpp"

namespace chronocyclic {

struct GaussParams;

// Gaussian pump with amplitude exp[-(w - w0)^2 / sigma^2] and spectral phase beta (w - w0)^2.
struct PumpSpec {
  double center_wavelength = 0;  // m
  double center_frequency = 0;   // rad/s
  double bandwidth = 0;          // intensity FWHM, rad/s
  double sigma = 0;              // amplitude 1/e half-width, rad/s
  double beta = 0;               // s^2
  double duration = 0;           // transform-limited intensity FWHM, s

  // Bandwidth given as an intensity FWHM in wavelength (m).
  static PumpSpec from_wavelength(double center_wavelength, double fwhm_wavelength, double beta);
  // Bandwidth given as an intensity FWHM in angular frequency (rad/s).
  static PumpSpec from_bandwidth(double center_wavelength, double fwhm_omega, double beta);

  PumpSpec with_beta(double b) const {
    PumpSpec p = *this;
    p.beta = b;
    return p;
  }
};

struct FrequencyGrid {
  UniformAxis signal;
  UniformAxis idler;

  static FrequencyGrid centered(double signal_center, double signal_half_span, std::size_t n_signal,
                                double idler_center, double idler_half_span, std::size_t n_idler);
};

struct JsaGrid {
  FrequencyGrid grid;
  Array2D<cplx> amplitude;  // rows: signal, cols: idler
  bool normalized = false;

  // sum |f|^2 dws dwi
  double norm() const;
};

double sinc(double x);

// sinc(L dk / 2) on the grid.
Array2D<double> pmf(const Crystal& crystal, const FrequencyGrid& grid);
// exp[-(ws + wi - wp)^2 / sigma^2] exp[i beta (ws + wi - wp)^2] on the grid.
Array2D<cplx> pef(const PumpSpec& pump, const FrequencyGrid& grid);

JsaGrid build_jsa(const Crystal& crystal, const PumpSpec& pump, const FrequencyGrid& grid);

// Scale to unit norm; throws NumericalError if the norm is below floor.
void normalize(JsaGrid& jsa, double floor = 1e-300);

enum class FilterTarget { Signal, Idler, Both };

inline constexpr double kNoFilter = std::numeric_limits<double>::infinity();

struct FilterSpec {
  double center = 0;                // rad/s
  double intensity_fwhm = kNoFilter;  // rad/s
  FilterTarget which = FilterTarget::Both;
};

struct FilteredJsa {
  JsaGrid jsa;
  // Fraction of the normalized joint spectrum transmitted by the filter(s).
  double heralding_efficiency;
};

// Gaussian amplitude filter, exp[-2 ln2 (w - center)^2 / fwhm^2], i.e. the square
// root of a Gaussian intensity profile with the given FWHM. Renormalizes.
FilteredJsa apply_filter(const JsaGrid& jsa, const FilterSpec& filter);

// Gaussian JSA on detunings from the given centers:
//   exp[-(Xss vs^2 + Xii vi^2 + 2 Xsi vs vi)] exp[i beta (vs + vi)^2]
// normalized on the grid.
JsaGrid gaussian_jsa(const GaussParams& params, const FrequencyGrid& grid, double signal_center,
                     double idler_center);

// Grid sized from the unchirped joint spectrum of a crystal and pump: each axis
// covers the region where its marginal exceeds 1e-2 of peak, plus a margin.
// With a filter, the extents are those of the filtered spectrum.
FrequencyGrid auto_grid(const Crystal& crystal, const PumpSpec& pump, std::size_t n_signal,
                        std::size_t n_idler, const FilterSpec& filter = {});

// Grid for gaussian_jsa: each axis trades spectral span (up to 8 marginal sds)
// against the conjugate time window that must hold that photon's chirped
// temporal profile.
FrequencyGrid gaussian_grid(const GaussParams& params, double signal_center, double idler_center,
                            std::size_t n);

// Quadratic fit w_i = a + b x + c x^2 of the joint-spectrum ridge (per-signal-row
// argmax of |f|^2 with parabolic sub-grid refinement), x = (w_s - mean) / sd,
// weighted by the signal marginal over rows where it exceeds 1e-2 of its peak.
struct CurvatureFit {
  double a = 0, b = 0, c = 0;  // rad/s
  double mean = 0;             // rad/s, weighted mean of w_s
  double scale = 0;            // rad/s, weighted sd of w_s
  double raw_c = 0;            // 1/(rad/s), coefficient in unscaled w_s
  std::size_t points = 0;
  // |c|: bow of the fitted ridge away from its chord at one sd, rad/s
  double metric() const { return c < 0 ? -c : c; }
};

CurvatureFit curvature_metric(const JsaGrid& jsa);

}  // namespace chronocyclic
