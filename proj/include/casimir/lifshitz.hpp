// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_LIFSHITZ_HPP
#define CASIMIR_LIFSHITZ_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/matsubara.hpp"

namespace casimir::lifshitz
{

class PlateGeometry
{
public:
  PlateGeometry(double a_um, double t_kelvin);

  double a_um() const noexcept { return a_um_; }
  double t_kelvin() const noexcept { return t_kelvin_; }
  double a_natural() const noexcept;
  // a T in natural units.
  double reduced_t() const noexcept;
  // 2 pi a T; the m-th Matsubara frequency is zeta_m a = m gamma.
  double gamma() const noexcept;
  // 1/T in 1/eV.
  double beta() const noexcept;
  // zeta_m in eV.
  double matsubara_ev(std::size_t m) const noexcept;

private:
  double a_um_;
  double t_kelvin_;
};

struct QuadratureConfig
{
  double y_max = 30.0;
  double rel_tol = 1e-9;
  std::size_t m_max = 100000;
  bool parallel = true;  // false selects the single-threaded reference kernel
  int threads = 0;

  void validate() const;
};

// Quantities with the gap scaled out, natural units:
// P a^4, F a^3, U a^3, S a^2.
struct ScaledThermo
{
  double pressure = 0.0;
  double free_energy = 0.0;
  double internal_energy = 0.0;
  double entropy = 0.0;
};

struct ThermoResult
{
  std::optional<double> pressure;         // mPa
  std::optional<double> free_energy;      // J/m^2
  std::optional<double> internal_energy;  // J/m^2
  std::optional<double> entropy;          // J/(K m^2)
  ScaledThermo scaled;
  std::size_t terms_used = 0;
  bool converged = true;
  // Bound on the discarded y > y_max part of the computed pressure or free
  // energy, in the scaled units above.
  double tail_bound = 0.0;
  std::string note;
};

ThermoResult pressure(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                      const QuadratureConfig& cfg = {});

ThermoResult free_energy(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                         const QuadratureConfig& cfg = {});

// S = -dF/dT by central differences with one Richardson step; U = F + T S.
ThermoResult entropy_internal(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                              const QuadratureConfig& cfg = {});

// All four quantities.
ThermoResult thermo(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                    const QuadratureConfig& cfg = {});

// U a^3 = d(beta F a^3)/d beta, differenced in beta. Independent of entropy_internal.
double internal_energy_from_beta(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                                 const QuadratureConfig& cfg = {});

// Unweighted pressure integrand of term m at y (TM and TE parts), without the
// -gamma/(2 pi^2) prefactor. Zero for y < m gamma.
matsubara::Term pressure_integrand(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                                   std::size_t m, double y);

// Scaled TM and TE parts of the pressure.
struct PressureSplit
{
  double tm = 0.0;
  double te = 0.0;
  std::size_t terms_used = 0;
  bool converged = true;
};

PressureSplit pressure_split(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                             const QuadratureConfig& cfg = {});

struct ModeShare
{
  std::size_t m;
  double fraction;  // percent of the total pressure
  double tm_share;  // percent of the total pressure carried by TM in this mode
  double te_share;
};

struct ModeBreakdown
{
  std::vector<ModeShare> modes;
  double pressure_mpa = 0.0;
  std::size_t terms_used = 0;
  bool converged = true;
};

ModeBreakdown mode_breakdown(const dispersion::DispersionModel& model, const PlateGeometry& geom,
                             const QuadratureConfig& cfg = {});

struct CoefficientSample
{
  std::size_t m;
  double y;
  double eps;
  double zeta_rad_s;
  double a_coeff;
  double b_coeff;
};

// A_m, B_m at fixed y = q a. Pairs with y < m gamma are skipped.
std::vector<CoefficientSample> coefficient_samples(const dispersion::DispersionModel& model,
                                                   const PlateGeometry& geom,
                                                   std::span<const std::size_t> ms,
                                                   std::span<const double> ys);

}  // namespace casimir::lifshitz

#endif  // CASIMIR_LIFSHITZ_HPP
