#pragma once

// Refractive indices, wavenumbers and group-velocity quantities for
// collinear propagation in negative uniaxial crystals (BBO, KDP).
// All frequencies are angular (rad/s), lengths in meters, times in seconds.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace chronocyclic {

enum class Material { BBO, KDP };
enum class Interaction { TypeI, TypeII };
enum class Polarization { Ordinary, Extraordinary };
enum class Role { Pump, Signal, Idler };

std::string_view to_string(Material m);
std::string_view to_string(Interaction i);
std::string_view to_string(Polarization p);
std::string_view to_string(Role r);

struct ModeRole {
  Role role;
  Polarization polarization;
};

// n^2 = A + B/(l^2 - C) + D l^2/(l^2 - E) - F l^2, with l in micrometers.
struct SellmeierCoefficients {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
};

struct SellmeierSet {
  Material material;
  std::string_view citation;
  SellmeierCoefficients ordinary;
  SellmeierCoefficients extraordinary;  // principal extraordinary index
  double lambda_min;                    // m
  double lambda_max;                    // m
};

const SellmeierSet& sellmeier_set(Material m);
double sellmeier_index(const SellmeierCoefficients& c, double lambda);

// Principal index n_o(lambda) or n_e-bar(lambda).
double principal_index(Material m, Polarization p, double lambda);

// Ordinary: n_o. Extraordinary: 1/n^2 = cos^2(theta)/n_o^2 + sin^2(theta)/n_ebar^2.
// Throws DomainError when lambda is outside the transparency window.
double refractive_index(Material m, Polarization p, double theta, double lambda);

// Index source used by a Crystal. Tests swap in stubs (vacuum, flat index).
struct IndexModel {
  std::string name;
  std::function<double(Polarization, double theta, double lambda)> index;
  double lambda_min = 0.0;
  double lambda_max = 0.0;

  static IndexModel sellmeier(Material m);
  static IndexModel constant(double n_o, double n_e, double lambda_min, double lambda_max);
};

struct CrystalSpec {
  Material material = Material::BBO;
  Interaction interaction = Interaction::TypeI;
  double cut_angle = 0.0;  // rad, in (0, pi/2)
  double length = 0.0;     // m
  // Polarization of the heralded (signal) photon. Type I forces Ordinary;
  // for Type II the idler takes the other one.
  Polarization signal_polarization = Polarization::Ordinary;
};

class Crystal {
 public:
  explicit Crystal(const CrystalSpec& spec);
  Crystal(const CrystalSpec& spec, IndexModel model);

  const CrystalSpec& spec() const { return spec_; }
  const IndexModel& index_model() const { return model_; }
  double length() const { return spec_.length; }
  double cut_angle() const { return spec_.cut_angle; }

  Polarization polarization(Role r) const;
  ModeRole mode(Role r) const { return {r, polarization(r)}; }

  Crystal with_length(double length) const;
  Crystal with_cut_angle(double theta) const;

  // Index for a polarization at the crystal's cut angle; window-checked.
  double index(Polarization p, double lambda) const;

 private:
  CrystalSpec spec_;
  IndexModel model_;
};

inline constexpr double kDefaultDerivativeStep = 1e11;  // rad/s

double wavenumber(const Crystal& crystal, ModeRole mode, double omega);
double wavenumber(const Crystal& crystal, Role role, double omega);

// dk/domega by central difference with the given step. The evaluation points
// omega +/- step must stay inside the window.
double group_delay_derivative(const Crystal& crystal, Role role, double omega,
                              double step = kDefaultDerivativeStep);

// k_p(ws + wi) - k_s(ws) - k_i(wi)
double phase_mismatch(const Crystal& crystal, double omega_s, double omega_i);

struct GvmParams {
  double tau_s;  // s
  double tau_i;  // s
};

// tau = L (k_p'(w_p) - k'(w_p/2)) at degenerate central frequencies.
GvmParams gvm_params(const Crystal& crystal, double pump_center);

// FWHM in pump angular frequency of sinc^2(L dk(w/2, w/2) / 2), searched
// around the phase-matching peak closest to pump_center.
double acceptance_bandwidth(const Crystal& crystal, double pump_center);

// Degenerate phase-matching pump frequency nearest pump_center (peak of the
// acceptance function).
double phase_matched_pump(const Crystal& crystal, double pump_center);

// Cut angle giving dk(w_p/2, w_p/2) = 0, the root nearest the crystal's own angle.
double phase_matching_angle(const Crystal& crystal, double pump_center);

struct CoefficientRow {
  std::string material;
  std::string polarization;
  std::string name;
  double value;
};

// Flat listing of the compiled-in tables, including the window bounds in meters.
std::vector<CoefficientRow> coefficient_table();

}  // namespace chronocyclic
