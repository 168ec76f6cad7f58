#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/presets.hpp"
#include "chronocyclic/units.hpp"

using namespace chronocyclic;
using Catch::Approx;
namespace u = chronocyclic::units;

namespace {

Crystal bbo_type2(double length = 10 * u::mm) {
  return Crystal({Material::BBO, Interaction::TypeII, 28.8 * u::deg, length, Polarization::Ordinary});
}

}  // namespace

TEST_CASE("principal indices match hand-evaluated Sellmeier forms") {
  // independent evaluations of the coefficient formulas
  CHECK(principal_index(Material::BBO, Polarization::Ordinary, 0.8 * u::um) == Approx(1.660553524880645).epsilon(1e-13));
  CHECK(principal_index(Material::BBO, Polarization::Extraordinary, 0.8 * u::um) ==
        Approx(1.5444203018104292).epsilon(1e-13));
  CHECK(principal_index(Material::KDP, Polarization::Ordinary, 0.5 * u::um) == Approx(1.5144980467413958).epsilon(1e-13));
  CHECK(principal_index(Material::KDP, Polarization::Extraordinary, 0.5 * u::um) ==
        Approx(1.472067981037026).epsilon(1e-13));
}

TEST_CASE("extraordinary index moves monotonically from n_o to n_e with angle") {
  for (Material m : {Material::BBO, Material::KDP}) {
    const double lambda = 0.6 * u::um;
    const double no = principal_index(m, Polarization::Ordinary, lambda);
    const double ne = principal_index(m, Polarization::Extraordinary, lambda);
    CHECK(refractive_index(m, Polarization::Extraordinary, 0.0, lambda) == Approx(no).epsilon(1e-15));
    CHECK(refractive_index(m, Polarization::Extraordinary, u::kPi / 2, lambda) == Approx(ne).epsilon(1e-15));
    double prev = no;
    for (int k = 1; k <= 90; ++k) {
      const double n = refractive_index(m, Polarization::Extraordinary, k * u::deg, lambda);
      CHECK(n <= prev);
      prev = n;
    }
    CHECK(refractive_index(m, Polarization::Ordinary, 0.7, lambda) == no);
  }
}

TEST_CASE("indices outside the transparency window are domain errors") {
  CHECK_THROWS_AS(principal_index(Material::BBO, Polarization::Ordinary, 0.15 * u::um), DomainError);
  CHECK_THROWS_AS(principal_index(Material::KDP, Polarization::Ordinary, 2.0 * u::um), DomainError);
  const Crystal c = bbo_type2();
  CHECK_THROWS_WITH(c.index(Polarization::Ordinary, 4 * u::um), Catch::Matchers::ContainsSubstring("window"));
}

TEST_CASE("crystal construction validates its inputs") {
  CHECK_THROWS_AS(Crystal({Material::BBO, Interaction::TypeI, 0.0, 1e-3, Polarization::Ordinary}), DomainError);
  CHECK_THROWS_AS(Crystal({Material::BBO, Interaction::TypeI, 0.5, -1e-3, Polarization::Ordinary}), DomainError);
  CHECK_THROWS_AS(Crystal({Material::BBO, Interaction::TypeI, 0.5, 1e-3, Polarization::Extraordinary}), DomainError);
  const Crystal t2 = bbo_type2();
  CHECK(t2.polarization(Role::Pump) == Polarization::Extraordinary);
  CHECK(t2.polarization(Role::Signal) == Polarization::Ordinary);
  CHECK(t2.polarization(Role::Idler) == Polarization::Extraordinary);
}

TEST_CASE("vacuum index model gives k = w/c and no group delay mismatch") {
  const Crystal vac({Material::BBO, Interaction::TypeII, 0.5, 1e-3, Polarization::Ordinary},
                    IndexModel::constant(1.0, 1.0, 0.1 * u::um, 5 * u::um));
  const double w = u::omega_from_wavelength(0.8 * u::um);
  CHECK(wavenumber(vac, Role::Signal, w) == Approx(w / u::kSpeedOfLight).epsilon(1e-15));
  CHECK(phase_mismatch(vac, w, 1.1 * w) == Approx(0.0).margin(1e-6));
  const GvmParams g = gvm_params(vac, 2 * w);
  const double transit = 1e-3 / u::kSpeedOfLight;
  CHECK(std::abs(g.tau_s) < 1e-9 * transit);
  CHECK(std::abs(g.tau_i) < 1e-9 * transit);
}

TEST_CASE("central-difference group delay is converged at the default step") {
  const Crystal c = bbo_type2();
  const double w = u::omega_from_wavelength(757 * u::nm);
  for (Role r : {Role::Pump, Role::Signal, Role::Idler}) {
    const double coarse = group_delay_derivative(c, r, w);
    const double fine = group_delay_derivative(c, r, w, kDefaultDerivativeStep / 2);
    // Richardson: the O(h^2) error estimate (coarse - fine) / 3 is negligible
    CHECK(std::abs(coarse - fine) / 3 < 1e-9 * std::abs(fine));
  }
  CHECK_THROWS_AS(group_delay_derivative(c, Role::Pump, u::omega_from_wavelength(0.1891 * u::um), 1e14),
                  DomainError);
}

TEST_CASE("group delay mismatches are linear in crystal length") {
  const Crystal c = bbo_type2(2 * u::mm);
  const double wp = u::omega_from_wavelength(757 * u::nm);
  const GvmParams a = gvm_params(c, wp);
  const GvmParams b = gvm_params(c.with_length(6 * u::mm), wp);
  CHECK(b.tau_s == Approx(3 * a.tau_s).epsilon(1e-15));
  CHECK(b.tau_i == Approx(3 * a.tau_i).epsilon(1e-15));
}

TEST_CASE("type I phase mismatch is symmetric under signal-idler exchange") {
  const Crystal c({Material::BBO, Interaction::TypeI, 29.2 * u::deg, 2 * u::mm, Polarization::Ordinary});
  const double w = u::omega_from_wavelength(800 * u::nm);
  CHECK(phase_mismatch(c, 0.9 * w, 1.1 * w) == phase_mismatch(c, 1.1 * w, 0.9 * w));
}

TEST_CASE("phase-matching angles and delays of the catalog crystals") {
  // regression values for the pinned coefficient sets (Zernike KDP, Kato BBO)
  const double kdp_w = u::omega_from_wavelength(415 * u::nm);
  const double bbo2_w = u::omega_from_wavelength(757 * u::nm);
  const double bbo1_w = u::omega_from_wavelength(400 * u::nm);
  const Crystal kdp({Material::KDP, Interaction::TypeII, 67.8 * u::deg, 5 * u::mm, Polarization::Ordinary});
  const Crystal bbo2 = bbo_type2();
  const Crystal bbo1({Material::BBO, Interaction::TypeI, 29.2 * u::deg, 2 * u::mm, Polarization::Ordinary});
  CHECK(phase_matching_angle(kdp, kdp_w) / u::deg == Approx(67.764).margin(0.01));
  CHECK(phase_matching_angle(bbo2, bbo2_w) / u::deg == Approx(28.779).margin(0.01));
  CHECK(phase_matching_angle(bbo1, bbo1_w) / u::deg == Approx(29.178).margin(0.01));

  const GvmParams gk = gvm_params(kdp, kdp_w);
  CHECK(std::abs(gk.tau_s) < 5 * u::fs);
  CHECK(gk.tau_i / u::fs == Approx(722.1).margin(0.5));
  const GvmParams g2 = gvm_params(bbo2, bbo2_w);
  CHECK(g2.tau_s / u::fs == Approx(-474.3).margin(0.5));
  CHECK(g2.tau_i / u::fs == Approx(474.8).margin(0.5));
  const GvmParams g1 = gvm_params(bbo1, bbo1_w);
  CHECK(g1.tau_s == g1.tau_i);
  CHECK(g1.tau_s / u::fs == Approx(387.24).margin(0.5));
}

TEST_CASE("catalog presets sit on the phase-matching peak") {
  for (const SourcePreset& p : preset_catalog()) {
    INFO(p.name);
    const Crystal c = p.make_crystal();
    const double wp = phase_matched_pump(c, u::omega_from_wavelength(p.pump_wavelength));
    CHECK(std::abs(phase_mismatch(c, wp / 2, wp / 2)) < 1e-2 * 2 / c.length());
  }
}

TEST_CASE("acceptance bandwidth scales inversely with length") {
  const Crystal kdp({Material::KDP, Interaction::TypeII, 67.8 * u::deg, 5 * u::mm, Polarization::Ordinary});
  const double wp = u::omega_from_wavelength(415 * u::nm);
  const double ref = acceptance_bandwidth(kdp, wp) * 5 * u::mm;
  for (double mm : {1.0, 2.0, 10.0, 20.0}) {
    INFO(mm << " mm");
    CHECK(acceptance_bandwidth(kdp.with_length(mm * u::mm), wp) * mm * u::mm == Approx(ref).epsilon(0.01));
  }
  CHECK(acceptance_bandwidth(kdp, wp) / u::Trad_per_s == Approx(15.4).margin(0.1));
}

TEST_CASE("coefficient table lists every set with its window") {
  const auto rows = coefficient_table();
  CHECK(rows.size() == 2 * 2 * 8);
  int found = 0;
  for (const auto& r : rows) {
    if (r.material == "KDP" && r.polarization == "extraordinary" && r.name == "A") {
      CHECK(r.value == 2.132668);
      ++found;
    }
    if (r.material == "BBO" && r.polarization == "ordinary" && r.name == "lambda_min_m") {
      CHECK(r.value == Approx(0.189e-6));
      ++found;
    }
  }
  CHECK(found == 2);
}
