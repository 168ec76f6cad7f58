#pragma once

// Run configuration: flat key=value text, the same keys as command-line flags.
//
//   preset            horizontal | vertical | positive | negative | circular
//   material          BBO | KDP
//   interaction       I | II
//   signal_polarization  o | e
//   length            e.g. 5mm (bare number: meters)
//   angle             e.g. 67.8deg (bare number: radians)
//   pump_wavelength   e.g. 415nm
//   pump_bandwidth    intensity FWHM, 5nm or 54.7THz (THz = 1e12 rad/s; bare: rad/s)
//   beta              8e-26 (s^2) or 80000fs2
//   grid              power of two in [128, 4096]
//   filter            "<fwhm> <signal|idler|both>", e.g. "100nm both"
//   filter_center     default: degenerate frequency; nm or THz
//   output_dir        directory for CSV output
//   emit              comma list of jsa, density, wigner, scalars, gauss

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/twophoton.hpp"

namespace chronocyclic {

using KeyValues = std::map<std::string, std::string>;

struct FilterConfig {
  double fwhm = 0;    // rad/s, intensity FWHM
  std::optional<double> center;  // rad/s
  FilterTarget which = FilterTarget::Both;
  std::string text;   // as given, for the echo
};

struct RunConfig {
  std::optional<std::string> preset;
  CrystalSpec crystal;
  double pump_wavelength = 0;  // m
  double pump_bandwidth = 0;   // rad/s intensity FWHM
  double beta = 0;             // s^2
  std::size_t grid_size = 512;
  std::optional<FilterConfig> filter;
  std::string output_dir = ".";
  std::set<std::string> emit{"scalars"};

  PumpSpec pump() const;
  Crystal make_crystal() const;
};

// Quantity parsing with unit suffixes; throws UsageError naming the key.
double parse_length(const std::string& key, const std::string& text);
double parse_angle(const std::string& key, const std::string& text);
double parse_beta(const std::string& key, const std::string& text);
// Bandwidth given in wavelength (nm/um) at center_wavelength, or in THz / bare rad/s.
double parse_bandwidth(const std::string& key, const std::string& text, double center_wavelength);

KeyValues parse_config_text(const std::string& text);
KeyValues read_config_file(const std::string& path);

// Later maps override earlier ones (file first, then flags).
RunConfig resolve_config(const KeyValues& kv);

// Loadable echo with every physical field spelled out in SI.
std::string config_echo(const RunConfig& cfg);

}  // namespace chronocyclic
