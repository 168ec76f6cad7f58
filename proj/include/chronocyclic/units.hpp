#pragma once

#include <numbers>

namespace chronocyclic::units {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double fs = 1e-15;
inline constexpr double fs2 = 1e-30;
// Angular frequency: 1 "THz" in the source tables is 1e12 rad/s.
inline constexpr double Trad_per_s = 1e12;

inline constexpr double deg = std::numbers::pi / 180.0;

constexpr double omega_from_wavelength(double lambda) { return kTwoPi * kSpeedOfLight / lambda; }
constexpr double wavelength_from_omega(double omega) { return kTwoPi * kSpeedOfLight / omega; }

}  // namespace chronocyclic::units
