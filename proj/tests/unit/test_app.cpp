#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "chronocyclic/config.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/pipeline.hpp"
#include "support/fixtures.hpp"

using namespace chronocyclic;
using namespace fixtures;
using Catch::Approx;
namespace u = chronocyclic::units;

namespace {

RunConfig config(KeyValues kv) { return resolve_config(kv); }

std::string usage_message(const KeyValues& kv) {
  try {
    resolve_config(kv);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

std::string without_comments(const std::string& text) {
  std::string out, line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.starts_with('#')) out += line + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("preset configuration resolves to the catalog entry", "[app]") {
  const RunConfig c = config({{"preset", "negative"}, {"beta", "8e-26"}});
  CHECK(c.crystal.material == Material::BBO);
  CHECK(c.crystal.interaction == Interaction::TypeI);
  CHECK(c.crystal.length == Approx(2 * u::mm));
  CHECK(c.crystal.cut_angle == Approx(29.2 * u::deg));
  CHECK(c.pump_wavelength == Approx(400 * u::nm));
  CHECK(c.pump().bandwidth == Approx(u::omega_from_wavelength(400 * u::nm) * 5.0 / 400).epsilon(1e-3));
  CHECK(c.beta == 8e-26);
  CHECK(config({{"preset", "negative"}, {"beta", "80000fs2"}}).beta == Approx(8e-26));

  const RunConfig circ = config({{"preset", "circular"}});
  CHECK(circ.pump().bandwidth == Approx(49.3e12).epsilon(0.01));

  // flags override preset fields
  const RunConfig longer = config({{"preset", "horizontal"}, {"length", "10mm"}});
  CHECK(longer.crystal.length == Approx(10 * u::mm));
}

TEST_CASE("invalid configurations are usage errors naming the key", "[app]") {
  CHECK_THAT(usage_message({{"material", "BBO"}}), Catch::Matchers::ContainsSubstring("required keys"));
  CHECK_THAT(usage_message({{"preset", "diagonal"}}), Catch::Matchers::ContainsSubstring("preset"));
  CHECK_THAT(usage_message({{"preset", "positive"}, {"grid", "1000"}}), Catch::Matchers::ContainsSubstring("grid"));
  CHECK_THAT(usage_message({{"preset", "positive"}, {"grid", "8192"}}), Catch::Matchers::ContainsSubstring("grid"));
  CHECK_THAT(usage_message({{"preset", "positive"}, {"pump_bandwidth", "-5nm"}}),
             Catch::Matchers::ContainsSubstring("pump_bandwidth"));
  CHECK_THAT(usage_message({{"preset", "positive"}, {"filter", "100nm sideways"}}),
             Catch::Matchers::ContainsSubstring("filter"));
  CHECK_THAT(usage_message({{"preset", "positive"}, {"colour", "red"}}), Catch::Matchers::ContainsSubstring("colour"));
}

TEST_CASE("filter settings parse", "[app]") {
  const RunConfig c = config({{"preset", "negative"}, {"filter", "100nm signal"}});
  REQUIRE(c.filter);
  CHECK(c.filter->which == FilterTarget::Signal);
  const double w0 = u::omega_from_wavelength(800 * u::nm);
  CHECK(c.filter->fwhm == Approx(w0 * 100.0 / 800).epsilon(1e-3));
  CHECK_FALSE(c.filter->center);
  const RunConfig both = config({{"preset", "negative"}, {"filter", "100nm"}});
  CHECK(both.filter->which == FilterTarget::Both);
}

TEST_CASE("config echo reloads to the same configuration", "[app]") {
  const RunConfig c = config({{"preset", "positive"}, {"beta", "4e-26"}, {"filter", "50nm idler"}, {"grid", "256"}});
  const RunConfig back = resolve_config(parse_config_text(config_echo(c)));
  CHECK(back.crystal.material == c.crystal.material);
  CHECK(back.crystal.interaction == c.crystal.interaction);
  CHECK(back.crystal.signal_polarization == c.crystal.signal_polarization);
  CHECK(back.crystal.length == c.crystal.length);
  CHECK(back.crystal.cut_angle == c.crystal.cut_angle);
  CHECK(back.pump_wavelength == c.pump_wavelength);
  CHECK(back.pump_bandwidth == c.pump_bandwidth);
  CHECK(back.beta == c.beta);
  CHECK(back.grid_size == c.grid_size);
  REQUIRE(back.filter);
  CHECK(back.filter->fwhm == c.filter->fwhm);
  CHECK(back.filter->which == c.filter->which);
  CHECK(without_comments(config_echo(back)) == without_comments(config_echo(c)));
}

TEST_CASE("catalog matches its printed table", "[app]") {
  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    const PumpSpec pump = p.pump();
    CHECK(std::abs(pump.bandwidth / p.table_bandwidth - 1) < 0.01);
    CHECK(std::abs(pump.duration / p.table_duration - 1) < 0.01);
  }
  const PumpSpec kdp = find_preset("horizontal").pump();
  CHECK(kdp.bandwidth == Approx(54.7e12).epsilon(0.01));
  CHECK(kdp.duration == Approx(50.7e-15).epsilon(0.01));
  CHECK(find_preset("Vertical").name == "vertical");
}

TEST_CASE("runs are deterministic and report the expected physics", "[app]") {
  const RunConfig vertical = config({{"preset", "vertical"}, {"beta", "8e-26"}, {"grid", "256"}});
  const RunReport a = run(vertical, false);
  const RunReport b = run(vertical, false);
  CHECK(a.scalar_rows() == b.scalar_rows());
  CHECK(std::abs(a.chirp_analytic) < 0.05);
  CHECK(std::abs(a.purity_trace - a.purity_schmidt) < 1e-6);
  CHECK(a.wigner_integral == Approx(1).epsilon(1e-9));
  CHECK(a.manifest.empty());

  const RunReport flat = run(config({{"preset", "positive"}, {"beta", "0"}, {"grid", "256"}}), false);
  const RunReport chirped = run(config({{"preset", "positive"}, {"beta", "8e-26"}, {"grid", "256"}}), false);
  CHECK(chirped.purity_trace < flat.purity_trace);
  CHECK(chirped.chirp_analytic > 0.2);
}

TEST_CASE("filtering the negative source straightens its ridge by at least 5x", "[app]") {
  const RunReport plain = run(config({{"preset", "negative"}, {"grid", "256"}}), false);
  const RunReport filtered = run(config({{"preset", "negative"}, {"grid", "256"}, {"filter", "100nm both"}}), false);
  CHECK(filtered.heralding_efficiency < 1);
  CHECK(plain.curvature / filtered.curvature >= 5.0);
}

TEST_CASE("sweeps", "[app]") {
  const std::vector<double> betas{0, 2e-26, 4e-26, 8e-26};
  const SweepResult positive = sweep(config({{"preset", "positive"}, {"grid", "256"}}), betas);
  REQUIRE(positive.rows.size() == 4);
  CHECK(positive.purity_non_increasing_in_abs_beta);
  for (std::size_t k = 1; k < 4; ++k) CHECK(positive.rows[k].purity <= positive.rows[k - 1].purity);

  const SweepResult vertical = sweep(config({{"preset", "vertical"}, {"grid", "256"}}), betas);
  for (const SweepRow& r : vertical.rows) CHECK(std::abs(r.chirp_analytic) < 0.05);

  const SweepResult pm = sweep(config({{"preset", "circular"}, {"grid", "256"}}), {8e-26, -8e-26});
  CHECK(pm.rows[0].purity == Approx(pm.rows[1].purity).epsilon(1e-12));
  CHECK(pm.rows[0].chirp_analytic == Approx(-pm.rows[1].chirp_analytic));

  const std::string csv = positive.csv();
  CHECK(csv.rfind("beta_s2,purity,schmidt_number,temporal_fwhm_s,chirp_analytic,chirp_fit\n", 0) == 0);
  CHECK_THAT(csv, Catch::Matchers::ContainsSubstring("# purity_non_increasing_in_abs_beta,true"));
}

TEST_CASE("pipeline errors carry the stage name", "[app]") {
  RunConfig c = config({{"preset", "negative"}, {"grid", "128"}});
  c.filter = FilterConfig{1e9, u::omega_from_wavelength(500 * u::nm), FilterTarget::Both, "far"};
  try {
    run(c, false);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Numerical);
    CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("filter"));
  }
}
