// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_UNITS_HPP
#define CASIMIR_UNITS_HPP

#include <numbers>

// Natural units (hbar = c = k_B = 1) with energies in eV are used internally.
// Everything that crosses the library boundary is in a in um, T in K,
// pressure in mPa, frequencies in eV. Conversions live here and nowhere else.
namespace casimir::units
{

inline constexpr double pi = std::numbers::pi;

// hbar*c in eV*um (197.327 eV*nm).
inline constexpr double hbar_c_ev_um = 0.1973269804;
// Boltzmann constant in eV/K; gives 300 K = 1/38.68 eV.
inline constexpr double k_boltzmann_ev = 8.617333262e-5;
// 1 eV expressed as an angular frequency, rad/s (hbar = 6.582119569e-16 eV*s).
inline constexpr double rad_per_s_per_ev = 1.0 / 6.582119569e-16;

inline constexpr double joule_per_ev = 1.602176634e-19;
inline constexpr double hbar_c_joule_m = hbar_c_ev_um * 1e-6 * joule_per_ev;
inline constexpr double k_boltzmann_joule = k_boltzmann_ev * joule_per_ev;

inline constexpr double zeta3 = 1.2020569031595943;

// Gap width in um -> natural length in 1/eV.
constexpr double gap_natural(double a_um) { return a_um / hbar_c_ev_um; }

constexpr double kelvin_to_ev(double t_kelvin) { return k_boltzmann_ev * t_kelvin; }
constexpr double ev_to_kelvin(double t_ev) { return t_ev / k_boltzmann_ev; }

constexpr double ev_to_rad_per_s(double ev) { return ev * rad_per_s_per_ev; }
constexpr double rad_per_s_to_ev(double w) { return w / rad_per_s_per_ev; }

// Dimensionless a*T (natural units) for a in um and T in K.
constexpr double reduced_temperature(double a_um, double t_kelvin)
{
  return gap_natural(a_um) * kelvin_to_ev(t_kelvin);
}

// Inverse of reduced_temperature at fixed gap.
constexpr double kelvin_from_reduced(double a_t, double a_um)
{
  return ev_to_kelvin(a_t / gap_natural(a_um));
}

// Scaled quantities (gap set to one) back to SI.
//   pressure:      P a^4 / (hbar c)  -> mPa
//   energy/area:   F a^3 / (hbar c)  -> J/m^2
//   entropy/area:  S a^2 / k_B       -> J/(K m^2)
constexpr double pressure_to_mpa(double scaled, double a_um)
{
  const double a_m = a_um * 1e-6;
  return scaled * hbar_c_joule_m / (a_m * a_m * a_m * a_m) * 1e3;
}

constexpr double energy_to_si(double scaled, double a_um)
{
  const double a_m = a_um * 1e-6;
  return scaled * hbar_c_joule_m / (a_m * a_m * a_m);
}

constexpr double entropy_to_si(double scaled, double a_um)
{
  const double a_m = a_um * 1e-6;
  return scaled * k_boltzmann_joule / (a_m * a_m);
}

}  // namespace casimir::units

#endif  // CASIMIR_UNITS_HPP
