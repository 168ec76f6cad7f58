#include <algorithm>
#include <cctype>
#include <string>

#include "chronocyclic/error.hpp"
#include "chronocyclic/presets.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {
namespace {

using namespace units;

SourcePreset make(std::string name, Material m, Interaction it, double length, double angle_deg, double lp,
                  double dl, Polarization signal, double bw, double tau, double acc) {
  SourcePreset p;
  p.name = std::move(name);
  p.crystal = {m, it, angle_deg * deg, length, signal};
  p.pump_wavelength = lp;
  p.pump_fwhm_wavelength = dl;
  p.heralded_mode_polarization = signal;
  p.table_bandwidth = bw * Trad_per_s;
  p.table_duration = tau * fs;
  p.table_acceptance = acc * Trad_per_s;
  return p;
}

}  // namespace

const std::vector<SourcePreset>& preset_catalog() {
  using enum Material;
  using enum Interaction;
  constexpr auto O = Polarization::Ordinary;
  constexpr auto E = Polarization::Extraordinary;
  // Horizontal and Vertical share crystal and pump; they differ in which
  // photon is heralded. The ordinary photon travels with the pump's group
  // velocity in KDP, so heralding it gives the horizontally elongated joint
  // spectrum and heralding the extraordinary one the vertical.
  static const std::vector<SourcePreset> catalog{
      make("horizontal", KDP, TypeII, 5 * mm, 67.8, 415 * nm, 5 * nm, O, 54.7, 50.7, 15.6),
      make("vertical", KDP, TypeII, 5 * mm, 67.8, 415 * nm, 5 * nm, E, 54.7, 50.7, 15.6),
      make("positive", BBO, TypeII, 10 * mm, 28.8, 757 * nm, 20 * nm, O, 65.8, 42.1, 208.2),
      make("negative", BBO, TypeI, 2 * mm, 29.2, 400 * nm, 5 * nm, O, 58.9, 47.1, 28.3),
      make("circular", BBO, TypeII, 2.293 * mm, 28.8, 757 * nm, 15 * nm, O, 49.3, 56.2, 328.9),
  };
  return catalog;
}

const SourcePreset& find_preset(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const SourcePreset& p : preset_catalog()) {
    if (p.name == lower) return p;
  }
  std::string known;
  for (const SourcePreset& p : preset_catalog()) known += (known.empty() ? "" : ", ") + p.name;
  throw UsageError("preset: unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace chronocyclic
