#include <cmath>

#include "chronocyclic/error.hpp"
#include "chronocyclic/twophoton.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {

PumpSpec PumpSpec::from_bandwidth(double center_wavelength, double fwhm_omega, double beta) {
  if (!(center_wavelength > 0.0)) throw DomainError("pump: center wavelength must be positive");
  if (!(fwhm_omega > 0.0)) throw DomainError("pump: bandwidth must be positive");
  PumpSpec p;
  p.center_wavelength = center_wavelength;
  p.center_frequency = units::omega_from_wavelength(center_wavelength);
  p.bandwidth = fwhm_omega;
  p.sigma = fwhm_omega / std::sqrt(2 * std::log(2.0));
  p.beta = beta;
  p.duration = 4 * std::log(2.0) / fwhm_omega;
  return p;
}

PumpSpec PumpSpec::from_wavelength(double center_wavelength, double fwhm_wavelength, double beta) {
  if (!(fwhm_wavelength > 0.0)) throw DomainError("pump: bandwidth must be positive");
  const double dw = units::kTwoPi * units::kSpeedOfLight * fwhm_wavelength / (center_wavelength * center_wavelength);
  return from_bandwidth(center_wavelength, dw, beta);
}

}  // namespace chronocyclic
