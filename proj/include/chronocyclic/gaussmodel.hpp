#pragma once

// Closed-form Gaussian model of the heralded photon's chronocyclic Wigner
// function. Inputs and outputs are SI; the formulas are evaluated in rad/fs
// and fs so that beta^2 and X products stay near unity.

#include "chronocyclic/dispersion.hpp"

namespace chronocyclic {

struct PumpSpec;

inline constexpr double kGaussGamma = 0.193;
// Spectral widths above this are reported as +infinity.
inline constexpr double kSpectralWidthCap = 1e20;  // rad/s

struct GaussParams {
  double sigma = 0;  // pump amplitude width, rad/s
  double beta = 0;   // s^2
  double tau_s = 0;  // s
  double tau_i = 0;  // s
  double gamma = kGaussGamma;

  static GaussParams from(const PumpSpec& pump, const GvmParams& gvm);
};

// X_lm = 1/sigma^2 + gamma tau_l tau_m / 4, for l, m in {Signal, Idler}. Units s^2.
double x_param(const GaussParams& p, Role l, Role m);

// Xss Xii - Xsi^2, evaluated as gamma (tau_s - tau_i)^2 / (4 sigma^2). Units s^4.
double x_determinant(const GaussParams& p);

// True when |tau_s - tau_i| <= 1e-6 max(|tau_s|, |tau_i|).
bool on_singular_line(const GaussParams& p);

double spectral_width(const GaussParams& p);  // rad/s, +inf on the singular line
double temporal_width(const GaussParams& p);  // s
double chirp_param(const GaussParams& p);     // 0 on the singular line

// Purity of the heralded photon for the Gaussian joint amplitude.
double gaussian_purity(const GaussParams& p);

struct AnalyticCwf {
  double delta_omega = 0;  // rad/s
  double delta_t = 0;      // s
  double chirp = 0;
  bool singular = false;
  // 1/e half-width of the spectral marginal, delta_omega / sqrt(1 - C^2)
  double marginal_bandwidth = 0;
};

AnalyticCwf analytic_params(const GaussParams& p);

// W(v, t) = sqrt(1 - C^2) / (pi dt dw) exp[-(v/dw)^2 - (t/dt)^2 + 2 C (v/dw)(t/dt)]
// so that C > 0 correlates detuning and time. Units 1/rad.
double analytic_cwf(const GaussParams& p, double nu, double t);

struct DurationBandwidth {
  bool skipped = false;  // singular line: spectral width diverges
  double product = 0;    // marginal bandwidth x delta_t x purity
  double residual = 0;   // |product - 1|
};

// Widths are 1/e half-widths: the spectral marginal width and delta_t.
DurationBandwidth duration_bandwidth_check(const GaussParams& p, double numeric_purity);

}  // namespace chronocyclic
