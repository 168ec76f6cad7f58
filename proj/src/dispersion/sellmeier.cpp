#include <cmath>
#include <sstream>

#include "chronocyclic/dispersion.hpp"
#include "chronocyclic/error.hpp"
#include "chronocyclic/units.hpp"

namespace chronocyclic {
namespace {

// K. Kato, IEEE J. Quantum Electron. 22, 1013 (1986).
constexpr SellmeierSet kBbo{
    Material::BBO,
    "K. Kato, IEEE J. Quantum Electron. QE-22, 1013 (1986)",
    {2.7359, 0.01878, 0.01822, 0.0, 0.0, 0.01354},
    {2.3753, 0.01224, 0.01667, 0.0, 0.0, 0.01516},
    0.189e-6,
    3.5e-6,
};

// F. Zernike, J. Opt. Soc. Am. 54, 1215 (1964).
constexpr SellmeierSet kKdp{
    Material::KDP,
    "F. Zernike, J. Opt. Soc. Am. 54, 1215 (1964)",
    {2.259276, 0.01008956, 0.012942625, 13.00522, 400.0, 0.0},
    {2.132668, 0.008637494, 0.012281043, 3.2279924, 400.0, 0.0},
    0.174e-6,
    1.57e-6,
};

void check_window(std::string_view what, double lambda, double lo, double hi) {
  if (!(lambda >= lo && lambda <= hi)) {
    std::ostringstream os;
    os << "wavelength " << lambda / units::um << " um outside the " << what << " transparency window ["
       << lo / units::um << ", " << hi / units::um << "] um";
    throw DomainError(os.str());
  }
}

}  // namespace

std::string_view to_string(Material m) { return m == Material::BBO ? "BBO" : "KDP"; }
std::string_view to_string(Interaction i) { return i == Interaction::TypeI ? "TypeI" : "TypeII"; }
std::string_view to_string(Polarization p) {
  return p == Polarization::Ordinary ? "ordinary" : "extraordinary";
}
std::string_view to_string(Role r) {
  switch (r) {
    case Role::Pump: return "pump";
    case Role::Signal: return "signal";
    case Role::Idler: return "idler";
  }
  return "?";
}

const SellmeierSet& sellmeier_set(Material m) { return m == Material::BBO ? kBbo : kKdp; }

double sellmeier_index(const SellmeierCoefficients& c, double lambda) {
  const double l = lambda / units::um;
  const double l2 = l * l;
  double n2 = c.A + c.B / (l2 - c.C) - c.F * l2;
  if (c.D != 0.0) n2 += c.D * l2 / (l2 - c.E);
  return std::sqrt(n2);
}

double principal_index(Material m, Polarization p, double lambda) {
  const SellmeierSet& s = sellmeier_set(m);
  check_window(to_string(m), lambda, s.lambda_min, s.lambda_max);
  return sellmeier_index(p == Polarization::Ordinary ? s.ordinary : s.extraordinary, lambda);
}

namespace {
double angle_tuned(double n_o, double n_e, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return 1.0 / std::sqrt(c * c / (n_o * n_o) + s * s / (n_e * n_e));
}
}  // namespace

double refractive_index(Material m, Polarization p, double theta, double lambda) {
  const double n_o = principal_index(m, Polarization::Ordinary, lambda);
  if (p == Polarization::Ordinary) return n_o;
  return angle_tuned(n_o, principal_index(m, Polarization::Extraordinary, lambda), theta);
}

IndexModel IndexModel::sellmeier(Material m) {
  const SellmeierSet& s = sellmeier_set(m);
  return {std::string(to_string(m)) + " Sellmeier",
          [m](Polarization p, double theta, double lambda) { return refractive_index(m, p, theta, lambda); },
          s.lambda_min, s.lambda_max};
}

IndexModel IndexModel::constant(double n_o, double n_e, double lambda_min, double lambda_max) {
  return {"constant index",
          [n_o, n_e](Polarization p, double theta, double) {
            return p == Polarization::Ordinary ? n_o : angle_tuned(n_o, n_e, theta);
          },
          lambda_min, lambda_max};
}

std::vector<CoefficientRow> coefficient_table() {
  std::vector<CoefficientRow> rows;
  for (Material m : {Material::BBO, Material::KDP}) {
    const SellmeierSet& s = sellmeier_set(m);
    for (Polarization p : {Polarization::Ordinary, Polarization::Extraordinary}) {
      const SellmeierCoefficients& c = p == Polarization::Ordinary ? s.ordinary : s.extraordinary;
      const std::string mat(to_string(m)), pol(to_string(p));
      for (auto [name, v] : {std::pair{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}, {"E", c.E}, {"F", c.F}}) {
        rows.push_back({mat, pol, name, v});
      }
      rows.push_back({mat, pol, "lambda_min_m", s.lambda_min});
      rows.push_back({mat, pol, "lambda_max_m", s.lambda_max});
    }
  }
  return rows;
}

}  // namespace chronocyclic
