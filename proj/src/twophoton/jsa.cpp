#include <cmath>
#include <sstream>

#include "chronocyclic/error.hpp"
#include "chronocyclic/gaussmodel.hpp"
#include "chronocyclic/kernels.hpp"
#include "chronocyclic/twophoton.hpp"

namespace chronocyclic {

UniformAxis UniformAxis::centered(double center, double half_span, std::size_t size) {
  if (size < 2) throw ContractError("axis needs at least two points");
  if (!(half_span > 0.0)) throw ContractError("axis half span must be positive");
  return {center - half_span, 2 * half_span / static_cast<double>(size - 1), size};
}

std::vector<double> UniformAxis::values() const {
  std::vector<double> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = (*this)[i];
  return v;
}

FrequencyGrid FrequencyGrid::centered(double signal_center, double signal_half_span, std::size_t n_signal,
                                      double idler_center, double idler_half_span, std::size_t n_idler) {
  return {UniformAxis::centered(signal_center, signal_half_span, n_signal),
          UniformAxis::centered(idler_center, idler_half_span, n_idler)};
}

double JsaGrid::norm() const {
  return kernels::sum_norm(amplitude.flat()) * grid.signal.step * grid.idler.step;
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

namespace {

void check_grid_window(const Crystal& crystal, const FrequencyGrid& grid) {
  struct Probe {
    const char* what;
    Role role;
    double omega;
  };
  const Probe probes[] = {
      {"signal axis lower end", Role::Signal, grid.signal.front()},
      {"signal axis upper end", Role::Signal, grid.signal.back()},
      {"idler axis lower end", Role::Idler, grid.idler.front()},
      {"idler axis upper end", Role::Idler, grid.idler.back()},
      {"pump frequency lower end", Role::Pump, grid.signal.front() + grid.idler.front()},
      {"pump frequency upper end", Role::Pump, grid.signal.back() + grid.idler.back()},
  };
  for (const Probe& p : probes) {
    try {
      wavenumber(crystal, p.role, p.omega);
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << p.what << " (" << p.omega << " rad/s): " << e.what();
      throw DomainError(os.str());
    }
  }
}

}  // namespace

Array2D<double> pmf(const Crystal& crystal, const FrequencyGrid& grid) {
  check_grid_window(crystal, grid);
  const std::size_t ns = grid.signal.size, ni = grid.idler.size;
  std::vector<double> ks(ns), ki(ni);
  for (std::size_t r = 0; r < ns; ++r) ks[r] = wavenumber(crystal, Role::Signal, grid.signal[r]);
  for (std::size_t c = 0; c < ni; ++c) ki[c] = wavenumber(crystal, Role::Idler, grid.idler[c]);
  const ModeRole pump = crystal.mode(Role::Pump);
  const double half_length = crystal.length() / 2;
  Array2D<double> out(ns, ni);
  for (std::size_t r = 0; r < ns; ++r) {
    const double ws = grid.signal[r];
    for (std::size_t c = 0; c < ni; ++c) {
      const double dk = wavenumber(crystal, pump, ws + grid.idler[c]) - ks[r] - ki[c];
      out(r, c) = sinc(half_length * dk);
    }
  }
  return out;
}

Array2D<cplx> pef(const PumpSpec& pump, const FrequencyGrid& grid) {
  const std::size_t ns = grid.signal.size, ni = grid.idler.size;
  const double inv_s2 = 1.0 / (pump.sigma * pump.sigma);
  Array2D<cplx> out(ns, ni);
  for (std::size_t r = 0; r < ns; ++r) {
    for (std::size_t c = 0; c < ni; ++c) {
      const double nu = grid.signal[r] + grid.idler[c] - pump.center_frequency;
      const double nu2 = nu * nu;
      out(r, c) = std::exp(-nu2 * inv_s2) * std::polar(1.0, pump.beta * nu2);
    }
  }
  return out;
}

void normalize(JsaGrid& jsa, double floor) {
  const double n = jsa.norm();
  if (!(n > floor) || !std::isfinite(n)) {
    std::ostringstream os;
    os << "joint amplitude has norm " << n << " on the grid (signal " << jsa.grid.signal.front() << ".."
       << jsa.grid.signal.back() << ", idler " << jsa.grid.idler.front() << ".." << jsa.grid.idler.back()
       << " rad/s); the grid misses the phase-matched region";
    throw NumericalError(os.str());
  }
  const double s = 1.0 / std::sqrt(n);
  for (cplx& v : jsa.amplitude.flat()) v *= s;
  jsa.normalized = true;
}

JsaGrid build_jsa(const Crystal& crystal, const PumpSpec& pump, const FrequencyGrid& grid) {
  const Array2D<double> phi = pmf(crystal, grid);
  Array2D<cplx> alpha = pef(pump, grid);
  for (std::size_t k = 0; k < alpha.size(); ++k) alpha.data()[k] *= phi.data()[k];
  JsaGrid jsa{grid, std::move(alpha), false};
  normalize(jsa);
  return jsa;
}

FilteredJsa apply_filter(const JsaGrid& jsa, const FilterSpec& filter) {
  if (!(filter.intensity_fwhm > 0.0)) throw DomainError("apply_filter: intensity FWHM must be positive");
  if (!jsa.normalized) throw ContractError("apply_filter: input joint amplitude is not normalized");
  if (std::isinf(filter.intensity_fwhm)) return {jsa, 1.0};

  const double k = 2 * std::log(2.0) / (filter.intensity_fwhm * filter.intensity_fwhm);
  auto profile = [&](const UniformAxis& axis, bool active) {
    std::vector<double> t(axis.size, 1.0);
    if (active) {
      for (std::size_t i = 0; i < axis.size; ++i) {
        const double d = axis[i] - filter.center;
        t[i] = std::exp(-k * d * d);
      }
    }
    return t;
  };
  const auto ts = profile(jsa.grid.signal, filter.which != FilterTarget::Idler);
  const auto ti = profile(jsa.grid.idler, filter.which != FilterTarget::Signal);

  FilteredJsa out{jsa, 0.0};
  Array2D<cplx>& f = out.jsa.amplitude;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) *= ts[r] * ti[c];
  }
  out.heralding_efficiency = out.jsa.norm();
  if (!(out.heralding_efficiency >= 1e-12)) {
    throw NumericalError("apply_filter: filter transmits a fraction below 1e-12 of the joint spectrum");
  }
  normalize(out.jsa);
  return out;
}

JsaGrid gaussian_jsa(const GaussParams& params, const FrequencyGrid& grid, double signal_center,
                     double idler_center) {
  const double a = x_param(params, Role::Signal, Role::Signal);
  const double b = x_param(params, Role::Idler, Role::Idler);
  const double c = x_param(params, Role::Signal, Role::Idler);
  if (!(a > 0.0 && b > 0.0) || x_determinant(params) < 0.0) {
    throw DomainError("gaussian_jsa: real quadratic form is not positive definite");
  }
  JsaGrid jsa{grid, Array2D<cplx>(grid.signal.size, grid.idler.size), false};
  for (std::size_t r = 0; r < grid.signal.size; ++r) {
    const double vs = grid.signal[r] - signal_center;
    for (std::size_t col = 0; col < grid.idler.size; ++col) {
      const double vi = grid.idler[col] - idler_center;
      const double re = -(a * vs * vs + b * vi * vi + 2 * c * vs * vi);
      const double sum = vs + vi;
      jsa.amplitude(r, col) = std::exp(re) * std::polar(1.0, params.beta * sum * sum);
    }
  }
  normalize(jsa);
  return jsa;
}

}  // namespace chronocyclic
