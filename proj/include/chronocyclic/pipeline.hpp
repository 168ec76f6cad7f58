#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chronocyclic/config.hpp"

namespace chronocyclic {

struct ManifestEntry {
  std::string file;
  std::size_t bytes = 0;
  std::string checksum;  // FNV-1a 64
};

struct RunReport {
  // dispersion
  double tau_s = 0, tau_i = 0;  // s
  // grid
  double signal_half_span = 0, idler_half_span = 0;  // rad/s
  // state
  double heralding_efficiency = 1;
  double purity_trace = 0, purity_schmidt = 0, schmidt_number = 0;
  double sigma_prime = 0;     // rad/s
  double spectral_fwhm = 0;   // rad/s
  double temporal_fwhm = 0;   // s, NaN when the profile does not fit the time window
  // I_t at the ends of the time window relative to its peak; well above 1e-3
  // means the grid step is too coarse for the state's duration
  double time_window_edge = 0;
  double wigner_integral = 0;
  double wigner_imag_residue = 0;
  double curvature = 0;       // rad/s
  // chronocyclic fit of the numeric Wigner function
  double chirp_fit = 0, delta_omega_fit = 0, delta_t_fit = 0;
  // closed-form Gaussian model
  double chirp_analytic = 0, delta_omega_analytic = 0, delta_t_analytic = 0;
  bool gauss_singular = false;

  double wall_time_s = 0;  // not part of the scalar export
  std::vector<ManifestEntry> manifest;

  std::vector<std::pair<std::string, std::string>> scalar_rows() const;
};

// Executes the pipeline; writes requested CSVs, config.resolved and
// manifest.csv into output_dir when write_files is set.
RunReport run(const RunConfig& cfg, bool write_files = true);

struct SweepRow {
  double beta = 0;
  double purity = 0;
  double schmidt_number = 0;
  double temporal_fwhm = 0;
  double chirp_analytic = 0;
  double chirp_fit = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool purity_non_increasing_in_abs_beta = false;
  std::string csv() const;
};

SweepResult sweep(const RunConfig& cfg, const std::vector<double>& betas);

}  // namespace chronocyclic
