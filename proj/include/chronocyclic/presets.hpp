#pragma once

// Source catalog: five crystal/pump configurations with their printed table
// values, which the preset layer re-derives and checks.
//
// Bandwidths labeled "THz" in the source table are angular (1e12 rad/s).
// The Circular pump bandwidth is printed as "15 mm"; 15 nm reproduces its
// 49.3 Trad/s and 56.2 fs entries and is used here.

#include <string>
#include <string_view>
#include <vector>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/twophoton.hpp"

namespace chronocyclic {

struct SourcePreset {
  std::string name;  // lower case
  CrystalSpec crystal;
  double pump_wavelength;       // m
  double pump_fwhm_wavelength;  // m
  Polarization heralded_mode_polarization;

  // printed table values
  double table_bandwidth;   // rad/s
  double table_duration;    // s
  double table_acceptance;  // rad/s

  PumpSpec pump(double beta = 0.0) const {
    return PumpSpec::from_wavelength(pump_wavelength, pump_fwhm_wavelength, beta);
  }
  Crystal make_crystal() const { return Crystal(crystal); }
};

const std::vector<SourcePreset>& preset_catalog();
// Case-insensitive lookup; throws UsageError listing the known names.
const SourcePreset& find_preset(std::string_view name);

// Reference chirp used across examples and checks: 8e-26 s^2.
inline constexpr double kReferenceChirp = 8e-26;

}  // namespace chronocyclic
