#include <cmath>
#include <limits>
#include <sstream>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {

using units::kSpeedOfLight;
using units::kTwoPi;

Crystal::Crystal(const CrystalSpec& spec) : Crystal(spec, IndexModel::sellmeier(spec.material)) {}

Crystal::Crystal(const CrystalSpec& spec, IndexModel model) : spec_(spec), model_(std::move(model)) {
  if (!(spec_.cut_angle > 0.0 && spec_.cut_angle < units::kPi / 2)) {
    throw DomainError("crystal cut angle must lie in (0, pi/2) rad");
  }
  if (!(spec_.length > 0.0)) throw DomainError("crystal length must be positive");
  if (spec_.interaction == Interaction::TypeI && spec_.signal_polarization != Polarization::Ordinary) {
    throw DomainError("type I interaction requires ordinary signal and idler");
  }
}

Polarization Crystal::polarization(Role r) const {
  switch (r) {
    case Role::Pump:
      return Polarization::Extraordinary;
    case Role::Signal:
      return spec_.signal_polarization;
    case Role::Idler:
      if (spec_.interaction == Interaction::TypeI) return Polarization::Ordinary;
      return spec_.signal_polarization == Polarization::Ordinary ? Polarization::Extraordinary
                                                                 : Polarization::Ordinary;
  }
  return Polarization::Ordinary;
}

Crystal Crystal::with_length(double length) const {
  CrystalSpec s = spec_;
  s.length = length;
  return Crystal(s, model_);
}

Crystal Crystal::with_cut_angle(double theta) const {
  CrystalSpec s = spec_;
  s.cut_angle = theta;
  return Crystal(s, model_);
}

double Crystal::index(Polarization p, double lambda) const {
  if (!(lambda >= model_.lambda_min && lambda <= model_.lambda_max)) {
    std::ostringstream os;
    os << "wavelength " << lambda / units::um << " um outside the " << model_.name
       << " transparency window [" << model_.lambda_min / units::um << ", "
       << model_.lambda_max / units::um << "] um";
    throw DomainError(os.str());
  }
  return model_.index(p, spec_.cut_angle, lambda);
}

double wavenumber(const Crystal& crystal, ModeRole mode, double omega) {
  if (!(omega > 0.0)) throw DomainError("wavenumber: angular frequency must be positive");
  const double lambda = kTwoPi * kSpeedOfLight / omega;
  return crystal.index(mode.polarization, lambda) * omega / kSpeedOfLight;
}

double wavenumber(const Crystal& crystal, Role role, double omega) {
  return wavenumber(crystal, crystal.mode(role), omega);
}

double group_delay_derivative(const Crystal& crystal, Role role, double omega, double step) {
  if (!(step > 0.0)) throw ContractError("group_delay_derivative: step must be positive");
  const IndexModel& m = crystal.index_model();
  const double lo = omega - step, hi = omega + step;
  const double lambda_hi = lo > 0.0 ? kTwoPi * kSpeedOfLight / lo : std::numeric_limits<double>::infinity();
  const double lambda_lo = kTwoPi * kSpeedOfLight / hi;
  if (!(lambda_lo >= m.lambda_min && lambda_hi <= m.lambda_max)) {
    std::ostringstream os;
    os << "group_delay_derivative: omega " << omega << " rad/s lacks a margin of " << step
       << " rad/s inside the " << m.name << " window";
    throw DomainError(os.str());
  }
  const ModeRole mode = crystal.mode(role);
  return (wavenumber(crystal, mode, hi) - wavenumber(crystal, mode, lo)) / (2.0 * step);
}

double phase_mismatch(const Crystal& crystal, double omega_s, double omega_i) {
  return wavenumber(crystal, Role::Pump, omega_s + omega_i) - wavenumber(crystal, Role::Signal, omega_s) -
         wavenumber(crystal, Role::Idler, omega_i);
}

GvmParams gvm_params(const Crystal& crystal, double pump_center) {
  const double kp = group_delay_derivative(crystal, Role::Pump, pump_center);
  const double ks = group_delay_derivative(crystal, Role::Signal, pump_center / 2);
  const double ki = group_delay_derivative(crystal, Role::Idler, pump_center / 2);
  const double L = crystal.length();
  return {L * (kp - ks), L * (kp - ki)};
}

namespace {

// Pump frequencies for which the pump and both degenerate daughters are in-window.
struct PumpRange {
  double lo, hi;
};

PumpRange degenerate_pump_range(const Crystal& crystal) {
  const IndexModel& m = crystal.index_model();
  return {2.0 * kTwoPi * kSpeedOfLight / m.lambda_max, kTwoPi * kSpeedOfLight / m.lambda_min};
}

double degenerate_mismatch(const Crystal& crystal, double omega_p) {
  return phase_mismatch(crystal, omega_p / 2, omega_p / 2);
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

double acceptance(const Crystal& crystal, double omega_p) {
  const double s = sinc(crystal.length() * degenerate_mismatch(crystal, omega_p) / 2.0);
  return s * s;
}

template <class F>
double bisect(F&& f, double a, double b, double fa, int iterations = 200) {
  for (int it = 0; it < iterations && a != b; ++it) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double phase_matched_pump(const Crystal& crystal, double pump_center) {
  const PumpRange range = degenerate_pump_range(crystal);
  // keep a small margin so window edges are never evaluated
  const double lo = range.lo * (1 + 1e-9), hi = range.hi * (1 - 1e-9);
  if (!(pump_center > lo && pump_center < hi)) {
    throw DomainError("phase_matched_pump: pump center outside the degenerate window");
  }
  auto f = [&](double w) { return degenerate_mismatch(crystal, w); };
  const double h = 1e-4 * pump_center;
  double best_w = pump_center, best_abs = std::abs(f(pump_center));
  double left = pump_center, f_left = f(left);
  double right = pump_center, f_right = f_left;
  for (int step = 0; step < 20000; ++step) {
    bool moved = false;
    if (right + h < hi) {
      const double w = right + h, fw = f(w);
      if ((fw < 0) != (f_right < 0)) return bisect(f, right, w, f_right);
      if (std::abs(fw) < best_abs) best_abs = std::abs(fw), best_w = w;
      right = w, f_right = fw, moved = true;
    }
    if (left - h > lo) {
      const double w = left - h, fw = f(w);
      if ((fw < 0) != (f_left < 0)) return bisect(f, w, left, fw);
      if (std::abs(fw) < best_abs) best_abs = std::abs(fw), best_w = w;
      left = w, f_left = fw, moved = true;
    }
    if (!moved) break;
  }
  // No sign change: take the closest approach to phase matching, refined by
  // golden-section search on |dk|.
  double a = std::max(lo, best_w - h), b = std::min(hi, best_w + h);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (std::abs(f(c)) < std::abs(f(d))) b = d; else a = c;
  }
  return 0.5 * (a + b);
}

double acceptance_bandwidth(const Crystal& crystal, double pump_center) {
  const double peak_w = phase_matched_pump(crystal, pump_center);
  const double peak = acceptance(crystal, peak_w);
  const double half = 0.5 * peak;
  const PumpRange range = degenerate_pump_range(crystal);
  const double lo = range.lo * (1 + 1e-9), hi = range.hi * (1 - 1e-9);
  const double h = 2e-6 * peak_w;
  auto g = [&](double w) { return acceptance(crystal, w) - half; };

  auto crossing = [&](double direction) {
    double w = peak_w, gw = g(w);
    while (true) {
      const double next = w + direction * h;
      if (next <= lo || next >= hi) {
        std::ostringstream os;
        os << "acceptance_bandwidth: no half-maximum crossing inside the scan window [" << lo << ", " << hi
           << "] rad/s";
        throw NumericalError(os.str());
      }
      const double gn = g(next);
      if (gn < 0) return direction > 0 ? bisect(g, w, next, gw) : bisect(g, next, w, gn);
      w = next, gw = gn;
    }
  };
  return crossing(+1.0) - crossing(-1.0);
}

double phase_matching_angle(const Crystal& crystal, double pump_center) {
  auto f = [&](double theta) { return degenerate_mismatch(crystal.with_cut_angle(theta), pump_center); };
  const double d = 0.25 * units::deg;
  double best = std::numeric_limits<double>::quiet_NaN();
  double prev_t = d, prev_f = f(prev_t);
  for (double t = 2 * d; t < units::kPi / 2 - 0.5 * d; t += d) {
    const double ft = f(t);
    if ((ft < 0) != (prev_f < 0)) {
      const double root = bisect(f, prev_t, t, prev_f);
      if (std::isnan(best) || std::abs(root - crystal.cut_angle()) < std::abs(best - crystal.cut_angle())) {
        best = root;
      }
    }
    prev_t = t, prev_f = ft;
  }
  if (std::isnan(best)) throw DomainError("phase_matching_angle: no degenerate phase-matching angle exists");
  return best;
}

}  // namespace chronocyclic
