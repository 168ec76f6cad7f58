#include "chronocyclic/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "chronocyclic/csv.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/gaussmodel.hpp"
#include "chronocyclic/singlephoton.hpp"

namespace chronocyclic {
namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (...) {
    rethrow_with_stage(name);
  }
}

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& content,
                std::vector<ManifestEntry>& manifest) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("output: cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw UsageError("output: write failed for '" + path.string() + "'");
  manifest.push_back({name, content.size(), fnv1a64_hex(content)});
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunReport::scalar_rows() const {
  return {
      {"tau_s_s", fmt15(tau_s)},
      {"tau_i_s", fmt15(tau_i)},
      {"signal_half_span_rad_s", fmt15(signal_half_span)},
      {"idler_half_span_rad_s", fmt15(idler_half_span)},
      {"heralding_efficiency", fmt15(heralding_efficiency)},
      {"purity_trace", fmt15(purity_trace)},
      {"purity_schmidt", fmt15(purity_schmidt)},
      {"schmidt_number", fmt15(schmidt_number)},
      {"sigma_prime_rad_s", fmt15(sigma_prime)},
      {"spectral_fwhm_rad_s", fmt15(spectral_fwhm)},
      {"temporal_fwhm_s", fmt15(temporal_fwhm)},
      {"time_window_edge", fmt15(time_window_edge)},
      {"wigner_integral", fmt15(wigner_integral)},
      {"wigner_imag_residue", fmt15(wigner_imag_residue)},
      {"curvature_rad_s", fmt15(curvature)},
      {"chirp_fit", fmt15(chirp_fit)},
      {"delta_omega_fit_rad_s", fmt15(delta_omega_fit)},
      {"delta_t_fit_s", fmt15(delta_t_fit)},
      {"chirp_analytic", fmt15(chirp_analytic)},
      {"delta_omega_analytic_rad_s", fmt15(delta_omega_analytic)},
      {"delta_t_analytic_s", fmt15(delta_t_analytic)},
      {"gauss_singular", gauss_singular ? "1" : "0"},
  };
}

RunReport run(const RunConfig& cfg, bool write_files) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport rep;

  const Crystal crystal = stage("dispersion", [&] { return cfg.make_crystal(); });
  const PumpSpec pump = stage("pump", [&] { return cfg.pump(); });
  const GvmParams gvm = stage("dispersion", [&] { return gvm_params(crystal, pump.center_frequency); });
  rep.tau_s = gvm.tau_s;
  rep.tau_i = gvm.tau_i;

  FilterSpec filter;
  if (cfg.filter) {
    filter = {cfg.filter->center.value_or(pump.center_frequency / 2), cfg.filter->fwhm, cfg.filter->which};
  }
  JsaGrid jsa = stage("twophoton", [&] {
    const FrequencyGrid grid = auto_grid(crystal, pump, cfg.grid_size, cfg.grid_size, filter);
    return build_jsa(crystal, pump, grid);
  });
  rep.signal_half_span = 0.5 * (jsa.grid.signal.back() - jsa.grid.signal.front());
  rep.idler_half_span = 0.5 * (jsa.grid.idler.back() - jsa.grid.idler.front());
  if (cfg.filter) {
    stage("filter", [&] {
      FilteredJsa out = apply_filter(jsa, filter);
      jsa = std::move(out.jsa);
      rep.heralding_efficiency = out.heralding_efficiency;
      return 0;
    });
  }
  rep.curvature = stage("curvature", [&] { return curvature_metric(jsa).metric(); });

  const DensityMatrix dm = stage("reduction", [&] { return reduce_density(jsa); });
  rep.purity_trace = purity_trace(dm);
  const SchmidtResult sr = stage("schmidt", [&] { return purity_schmidt(jsa); });
  rep.purity_schmidt = sr.purity;
  rep.schmidt_number = sr.schmidt_number;

  const DiagonalView dv = stage("diagonal view", [&] { return to_diagonal_view(dm); });
  rep.sigma_prime = antidiagonal_width(dv);
  const WignerGrid w = stage("wigner", [&] { return wigner_from_density(dv); });
  rep.wigner_integral = w.integral();
  rep.wigner_imag_residue = w.imag_residue;
  stage("widths", [&] {
    rep.spectral_fwhm = fwhm(dm.axis, spectral_intensity(dm));
    const TemporalProfile it = temporal_intensity(dv);
    const double peak = *std::max_element(it.intensity.begin(), it.intensity.end());
    rep.time_window_edge = std::max(it.intensity.front(), it.intensity.back()) / peak;
    // a profile wider than the time window has no FWHM on this grid
    rep.temporal_fwhm = rep.time_window_edge < 0.5 ? fwhm(it.time_axis, it.intensity)
                                                   : std::numeric_limits<double>::quiet_NaN();
    const CwfMoments m = cwf_moments(w);
    rep.chirp_fit = m.correlation;
    rep.delta_omega_fit = m.delta_omega;
    rep.delta_t_fit = m.delta_t;
    return 0;
  });

  const GaussParams gp = GaussParams::from(pump, gvm);
  const AnalyticCwf an = stage("gaussmodel", [&] { return analytic_params(gp); });
  rep.chirp_analytic = an.chirp;
  rep.delta_omega_analytic = an.delta_omega;
  rep.delta_t_analytic = an.delta_t;
  rep.gauss_singular = an.singular;

  if (write_files) {
    stage("output", [&] {
      const std::filesystem::path dir(cfg.output_dir);
      std::filesystem::create_directories(dir);
      write_file(dir, "config.resolved", config_echo(cfg), rep.manifest);
      if (cfg.emit.count("jsa")) write_file(dir, "jsa.csv", jsa_csv(jsa), rep.manifest);
      if (cfg.emit.count("density")) write_file(dir, "density.csv", density_csv(dm), rep.manifest);
      if (cfg.emit.count("wigner")) write_file(dir, "wigner.csv", wigner_csv(w), rep.manifest);
      if (cfg.emit.count("scalars")) write_file(dir, "scalars.csv", key_value_csv(rep.scalar_rows()), rep.manifest);
      if (cfg.emit.count("gauss")) {
        const double p = gaussian_purity(gp);
        write_file(dir, "gauss.csv",
                   key_value_csv({{"sigma_rad_s", fmt15(gp.sigma)},
                                  {"beta_s2", fmt15(gp.beta)},
                                  {"tau_s_s", fmt15(gp.tau_s)},
                                  {"tau_i_s", fmt15(gp.tau_i)},
                                  {"delta_omega_rad_s", fmt15(an.delta_omega)},
                                  {"delta_t_s", fmt15(an.delta_t)},
                                  {"chirp", fmt15(an.chirp)},
                                  {"marginal_bandwidth_rad_s", fmt15(an.marginal_bandwidth)},
                                  {"purity", fmt15(p)},
                                  {"singular", an.singular ? "1" : "0"}}),
                   rep.manifest);
      }
      std::string manifest = "file,bytes,fnv1a64\n";
      for (const auto& e : rep.manifest) manifest += e.file + "," + std::to_string(e.bytes) + "," + e.checksum + "\n";
      std::ofstream(dir / "manifest.csv", std::ios::binary) << manifest;
      return 0;
    });
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

SweepResult sweep(const RunConfig& cfg, const std::vector<double>& betas) {
  if (betas.empty()) throw UsageError("sweep: no beta values given");
  SweepResult res;
  for (double b : betas) {
    RunConfig c = cfg;
    c.beta = b;
    const RunReport r = run(c, false);
    res.rows.push_back({b, r.purity_trace, r.schmidt_number, r.temporal_fwhm, r.chirp_analytic, r.chirp_fit});
  }
  std::vector<SweepRow> sorted = res.rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRow& a, const SweepRow& b) { return std::abs(a.beta) < std::abs(b.beta); });
  res.purity_non_increasing_in_abs_beta = true;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].purity > sorted[k - 1].purity * (1 + 1e-12)) res.purity_non_increasing_in_abs_beta = false;
  }
  return res;
}

std::string SweepResult::csv() const {
  std::string out = "beta_s2,purity,schmidt_number,temporal_fwhm_s,chirp_analytic,chirp_fit\n";
  for (const SweepRow& r : rows) {
    out += fmt15(r.beta) + "," + fmt15(r.purity) + "," + fmt15(r.schmidt_number) + "," + fmt15(r.temporal_fwhm) +
           "," + fmt15(r.chirp_analytic) + "," + fmt15(r.chirp_fit) + "\n";
  }
  out += std::string("# purity_non_increasing_in_abs_beta,") + (purity_non_increasing_in_abs_beta ? "true" : "false") +
         "\n";
  return out;
}

}  // namespace chronocyclic
