// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_CUTOFF_MODEL_HPP
#define CASIMIR_CUTOFF_MODEL_HPP

// Real metal approximated by a constant large eps with a sharp TE cutoff:
// B = 1 for p < sqrt(eps), 0 above. All quantities are gap-scaled (F a^3,
// S a^2) functions of the reduced temperature a T.
namespace casimir::cutoff
{

inline constexpr double min_eps = 25.0;

struct CutoffParams
{
  double eps;
  double gamma;

  double gamma_c() const;
  void validate() const;
};

// 1 for p < sqrt(eps), else 0 (the boundary belongs to the zero branch).
double step_te_coefficient(double p, double eps);

// F(T) = F_I(T) - F_I(sqrt(eps) T) / (2 sqrt(eps)).
double free_energy_cutoff(double eps, double reduced_t);
// TE half: F_I(T)/2 - F_I(sqrt(eps) T) / (2 sqrt(eps)).
double te_free_energy_cutoff(double eps, double reduced_t);

// -dF/d(aT) by Richardson-extrapolated central differences.
double entropy_cutoff(double eps, double reduced_t);
double te_entropy_cutoff(double eps, double reduced_t);

// (3 zeta(3) / (4 pi)) (1 - eps) (aT)^2; requires sqrt(eps) aT <= 0.1.
double te_entropy_lowT(double eps, double reduced_t);
inline constexpr double low_t_limit = 0.1;

// High-temperature slope magnitude of the ideal-metal free energy, zeta(3) / (8 pi).
double ideal_slope();

// SI forms: J/m^2 and J/(K m^2).
double free_energy_cutoff(double eps, double a_um, double t_kelvin);
double te_entropy_lowT(double eps, double a_um, double t_kelvin);

}  // namespace casimir::cutoff

#endif  // CASIMIR_CUTOFF_MODEL_HPP
