#include "chronocyclic/gaussmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chronocyclic/error.hpp"
#include "chronocyclic/twophoton.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {
namespace {

// Parameters in rad/fs, fs, fs^2.
struct Fs {
  double sigma, beta, ts, ti, gamma;
  double a, b, c;  // X_ss, X_ii, X_si in fs^2
  double g;        // gamma (ts - ti)^2 / 4
};

Fs to_fs(const GaussParams& p) {
  if (!(p.sigma > 0.0)) throw DomainError("gauss model: pump width sigma must be positive");
  Fs f{};
  f.sigma = p.sigma * units::fs;
  f.beta = p.beta / units::fs2;
  f.ts = p.tau_s / units::fs;
  f.ti = p.tau_i / units::fs;
  f.gamma = p.gamma;
  const double inv = 1.0 / (f.sigma * f.sigma);
  f.a = inv + f.gamma * f.ts * f.ts / 4;
  f.b = inv + f.gamma * f.ti * f.ti / 4;
  f.c = inv + f.gamma * f.ts * f.ti / 4;
  const double d = f.ts - f.ti;
  f.g = f.gamma * d * d / 4;
  if (!(f.a > 0.0 && f.b > 0.0)) throw DomainError("gauss model: X_ss and X_ii must be positive");
  if (f.g < 0.0) throw DomainError("gauss model: X_ss X_ii - X_si^2 is negative (gamma < 0)");
  return f;
}

// Denominator bracket beta^2 (Xss - 2Xsi + Xii) + Xss (Xss Xii - Xsi^2), factored.
double bracket(const Fs& f) { return f.g * (f.beta * f.beta + f.a / (f.sigma * f.sigma)); }

}  // namespace

GaussParams GaussParams::from(const PumpSpec& pump, const GvmParams& gvm) {
  return {pump.sigma, pump.beta, gvm.tau_s, gvm.tau_i, kGaussGamma};
}

double x_param(const GaussParams& p, Role l, Role m) {
  auto tau = [&](Role r) {
    if (r == Role::Signal) return p.tau_s;
    if (r == Role::Idler) return p.tau_i;
    throw ContractError("x_param: roles must be Signal or Idler");
  };
  return 1.0 / (p.sigma * p.sigma) + p.gamma * tau(l) * tau(m) / 4;
}

double x_determinant(const GaussParams& p) {
  const double d = p.tau_s - p.tau_i;
  return p.gamma * d * d / (4 * p.sigma * p.sigma);
}

bool on_singular_line(const GaussParams& p) {
  return std::abs(p.tau_s - p.tau_i) <= 1e-6 * std::max(std::abs(p.tau_s), std::abs(p.tau_i));
}

double spectral_width(const GaussParams& p) {
  const Fs f = to_fs(p);
  if (on_singular_line(p)) return std::numeric_limits<double>::infinity();
  const double den = 2 * bracket(f);
  if (!(den > 0.0)) throw DomainError("spectral_width: non-positive denominator (degenerate X form)");
  const double w = std::sqrt((f.beta * f.beta + f.a * f.b) / den) / units::fs;
  return w > kSpectralWidthCap ? std::numeric_limits<double>::infinity() : w;
}

double temporal_width(const GaussParams& p) {
  const Fs f = to_fs(p);
  return std::sqrt(2 * (f.beta * f.beta + f.a * f.b) / f.b) * units::fs;
}

double chirp_param(const GaussParams& p) {
  const Fs f = to_fs(p);
  if (on_singular_line(p)) return 0.0;
  const double radicand = f.b * bracket(f);
  if (!(radicand > 0.0)) throw DomainError("chirp_param: non-positive radicand");
  return f.beta * (f.b - f.c) / std::sqrt(radicand);
}

double gaussian_purity(const GaussParams& p) {
  const Fs f = to_fs(p);
  const double det = f.g / (f.sigma * f.sigma);
  return std::sqrt(det / (f.a * f.b + f.beta * f.beta));
}

AnalyticCwf analytic_params(const GaussParams& p) {
  AnalyticCwf out;
  out.singular = on_singular_line(p);
  out.delta_omega = spectral_width(p);
  out.delta_t = temporal_width(p);
  out.chirp = chirp_param(p);
  out.marginal_bandwidth = out.singular ? std::numeric_limits<double>::infinity()
                                        : out.delta_omega / std::sqrt(1 - out.chirp * out.chirp);
  return out;
}

double analytic_cwf(const GaussParams& p, double nu, double t) {
  if (on_singular_line(p)) throw DomainError("analytic_cwf: undefined for tau_s = tau_i (infinite spectral width)");
  const double dw = spectral_width(p);
  const double dt = temporal_width(p);
  const double C = chirp_param(p);
  if (!(std::abs(C) < 1.0)) throw DomainError("analytic_cwf: |C| = 1 gives a degenerate distribution");
  const double x = nu / dw, y = t / dt;
  return std::sqrt(1 - C * C) / (units::kPi * dt * dw) * std::exp(-x * x - y * y + 2 * C * x * y);
}

DurationBandwidth duration_bandwidth_check(const GaussParams& p, double numeric_purity) {
  DurationBandwidth out;
  if (on_singular_line(p)) {
    out.skipped = true;
    return out;
  }
  const AnalyticCwf a = analytic_params(p);
  out.product = a.marginal_bandwidth * a.delta_t * numeric_purity;
  out.residual = std::abs(out.product - 1.0);
  return out;
}

}  // namespace chronocyclic
