// Command-line front end: run, sweep, presets, dump-dispersion, gauss.
//
// Frequencies labeled THz are angular: 1 THz here means 1e12 rad/s, the
// convention of the source table the presets reproduce.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chronocyclic/config.hpp"
#include "chronocyclic/csv.hpp"
#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/gaussmodel.hpp"
#include "chronocyclic/pipeline.hpp"
#include "chronocyclic/presets.hpp"
#include "chronocyclic/units.hpp"

namespace cc = chronocyclic;

namespace {

struct ConfigFlags {
  std::string config_path;
  cc::KeyValues flags;
  std::vector<std::string> filter_tokens;
};

void add_config_flags(CLI::App* app, ConfigFlags& cf) {
  app->add_option("--config", cf.config_path, "flat key=value configuration file")->check(CLI::ExistingFile);
  const std::vector<std::pair<std::string, std::string>> keys = {
      {"preset", "horizontal | vertical | positive | negative | circular"},
      {"material", "BBO | KDP"},
      {"interaction", "I | II"},
      {"signal_polarization", "o | e"},
      {"length", "crystal length, e.g. 5mm"},
      {"angle", "cut angle, e.g. 29.2deg (bare: rad)"},
      {"pump_wavelength", "e.g. 415nm"},
      {"pump_bandwidth", "intensity FWHM, e.g. 5nm or 54.7THz (THz = 1e12 rad/s)"},
      {"beta", "pump chirp, s^2 or fs2 suffix"},
      {"grid", "points per axis, power of two in [128, 4096]"},
      {"filter_center", "filter center, nm or THz (default: degenerate frequency)"},
      {"output_dir", "directory for CSV output"},
      {"emit", "comma list of jsa, density, wigner, scalars, gauss"},
  };
  for (const auto& [key, help] : keys) {
    std::string flag = "--" + key;
    for (char& c : flag) if (c == '_') c = '-';
    app->add_option_function<std::string>(flag, [&cf, key = key](const std::string& v) { cf.flags[key] = v; }, help);
  }
  app->add_option("--filter", cf.filter_tokens, "spectral filter, e.g. 100nm both")->expected(1, 2);
}

cc::RunConfig resolve(const ConfigFlags& cf) {
  cc::KeyValues kv;
  if (!cf.config_path.empty()) kv = cc::read_config_file(cf.config_path);
  for (const auto& [k, v] : cf.flags) kv[k] = v;
  if (!cf.filter_tokens.empty()) {
    std::string text;
    for (const auto& t : cf.filter_tokens) text += (text.empty() ? "" : " ") + t;
    kv["filter"] = text;
  }
  return cc::resolve_config(kv);
}

std::vector<double> parse_beta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw cc::UsageError("betas: empty entry in '" + text + "'");
    out.push_back(cc::parse_beta("betas", item));
  }
  if (out.empty()) throw cc::UsageError("betas: no values given");
  return out;
}

int cmd_run(const ConfigFlags& cf) {
  const cc::RunConfig cfg = resolve(cf);
  const cc::RunReport rep = cc::run(cfg, true);
  std::cout << cc::key_value_csv(rep.scalar_rows());
  std::fprintf(stderr, "wall_time_s,%.3f\n", rep.wall_time_s);
  if (rep.time_window_edge > 1e-3) {
    std::fprintf(stderr, "warning: temporal intensity reaches %.3g of peak at the time window edge; raise --grid\n",
                 rep.time_window_edge);
  }
  return 0;
}

int cmd_sweep(const ConfigFlags& cf, const std::string& betas, const std::string& out) {
  const cc::RunConfig cfg = resolve(cf);
  const cc::SweepResult res = cc::sweep(cfg, parse_beta_list(betas));
  const std::string csv = res.csv();
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!(f << csv)) throw cc::UsageError("out: cannot write '" + out + "'");
  }
  return 0;
}

int cmd_presets() {
  std::cout << "name,material,interaction,signal_polarization,length_m,angle_rad,pump_wavelength_m,"
               "pump_fwhm_wavelength_m,bandwidth_rad_s,duration_s,table_bandwidth_rad_s,table_duration_s,"
               "table_acceptance_rad_s\n";
  for (const cc::SourcePreset& p : cc::preset_catalog()) {
    const cc::PumpSpec pump = p.pump();
    std::cout << p.name << "," << cc::to_string(p.crystal.material) << "," << cc::to_string(p.crystal.interaction)
              << "," << cc::to_string(p.crystal.signal_polarization) << "," << cc::fmt15(p.crystal.length) << ","
              << cc::fmt15(p.crystal.cut_angle) << "," << cc::fmt15(p.pump_wavelength) << ","
              << cc::fmt15(p.pump_fwhm_wavelength) << "," << cc::fmt15(pump.bandwidth) << ","
              << cc::fmt15(pump.duration) << "," << cc::fmt15(p.table_bandwidth) << ","
              << cc::fmt15(p.table_duration) << "," << cc::fmt15(p.table_acceptance) << "\n";
  }
  return 0;
}

int cmd_dump_dispersion() {
  std::cout << "material,polarization,coefficient_name,value\n";
  for (const cc::CoefficientRow& r : cc::coefficient_table()) {
    std::cout << r.material << "," << r.polarization << "," << r.name << "," << cc::fmt15(r.value) << "\n";
  }
  return 0;
}

struct GaussFlags {
  std::string preset, sigma, beta, tau_s, tau_i;
};

int cmd_gauss(const GaussFlags& g) {
  cc::GaussParams p;
  if (!g.preset.empty()) {
    const cc::SourcePreset& sp = cc::find_preset(g.preset);
    const double beta = g.beta.empty() ? 0.0 : cc::parse_beta("beta", g.beta);
    const cc::PumpSpec pump = sp.pump(beta);
    p = cc::GaussParams::from(pump, cc::gvm_params(sp.make_crystal(), pump.center_frequency));
  } else {
    std::string missing;
    for (const auto& [name, v] : {std::pair{"sigma", &g.sigma}, {"tau_s", &g.tau_s}, {"tau_i", &g.tau_i}}) {
      if (v->empty()) missing += std::string(missing.empty() ? "" : ", ") + name;
    }
    if (!missing.empty()) throw cc::UsageError("gauss: missing required keys without a preset: " + missing);
    auto number = [](const char* key, const std::string& s) {
      try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw cc::UsageError(std::string(key) + ": not a number: '" + s + "'");
      }
    };
    p.sigma = number("sigma", g.sigma);
    p.beta = g.beta.empty() ? 0.0 : cc::parse_beta("beta", g.beta);
    p.tau_s = number("tau_s", g.tau_s);
    p.tau_i = number("tau_i", g.tau_i);
  }
  const cc::AnalyticCwf a = cc::analytic_params(p);
  const cc::DurationBandwidth db = cc::duration_bandwidth_check(p, cc::gaussian_purity(p));
  std::cout << cc::key_value_csv({
      {"sigma_rad_s", cc::fmt15(p.sigma)},
      {"beta_s2", cc::fmt15(p.beta)},
      {"tau_s_s", cc::fmt15(p.tau_s)},
      {"tau_i_s", cc::fmt15(p.tau_i)},
      {"delta_omega_rad_s", cc::fmt15(a.delta_omega)},
      {"delta_t_s", cc::fmt15(a.delta_t)},
      {"chirp", cc::fmt15(a.chirp)},
      {"purity", cc::fmt15(cc::gaussian_purity(p))},
      {"residual", db.skipped ? std::string("nan") : cc::fmt15(db.residual)},
      {"singular", a.singular ? "1" : "0"},
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chronocyclic simulator for heralded SPDC photons"};
  app.require_subcommand(1);

  ConfigFlags run_flags, sweep_flags;
  auto* run = app.add_subcommand("run", "run the pipeline and print scalar results");
  add_config_flags(run, run_flags);

  auto* sw = app.add_subcommand("sweep", "one pipeline run per beta value");
  add_config_flags(sw, sweep_flags);
  std::string betas, sweep_out;
  sw->add_option("--betas", betas, "comma list of chirp values, s^2 or fs2")->required();
  sw->add_option("--out", sweep_out, "write the sweep CSV to this file instead of stdout");

  auto* presets = app.add_subcommand("presets", "print the source catalog as CSV");
  auto* dump = app.add_subcommand("dump-dispersion", "print the Sellmeier coefficient tables as CSV");

  GaussFlags gf;
  auto* gauss = app.add_subcommand("gauss", "closed-form Gaussian model parameters");
  gauss->add_option("--preset", gf.preset, "take sigma and the delays from a preset");
  gauss->add_option("--sigma", gf.sigma, "pump amplitude 1/e half-width, rad/s");
  gauss->add_option("--beta", gf.beta, "pump chirp, s^2 or fs2 suffix");
  gauss->add_option("--tau-s", gf.tau_s, "signal group delay mismatch, s");
  gauss->add_option("--tau-i", gf.tau_i, "idler group delay mismatch, s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (sw->parsed()) return cmd_sweep(sweep_flags, betas, sweep_out);
    if (presets->parsed()) return cmd_presets();
    if (dump->parsed()) return cmd_dump_dispersion();
    if (gauss->parsed()) return cmd_gauss(gf);
  } catch (const cc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cc::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
