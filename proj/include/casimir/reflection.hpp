// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_REFLECTION_HPP
#define CASIMIR_REFLECTION_HPP

#include "casimir/dispersion.hpp"

namespace casimir::reflection
{

struct LifshitzVariables
{
  double p;    // q / zeta, >= 1
  double s;    // sqrt(eps - 1 + p^2)
  double eps;
};

// Squared reflection coefficients: a_coeff is TM, b_coeff is TE.
struct ReflectionPair
{
  double a_coeff;
  double b_coeff;
};

// Three half-spaces: eps1 for z < 0, eps3 in the gap 0 < z < a, eps2 for z > a.
struct SlabProfile
{
  double eps1;
  double eps2;
  double eps3;
  double a_um;
};

LifshitzVariables variables(double eps, double p);

// A = ((eps p - s)/(eps p + s))^2, B = ((s - p)/(s + p))^2; (1, 1) for the ideal sentinel.
ReflectionPair coefficients(double eps, double p);

// m = 0 limits at y = q a. a_um is needed only for the plasma model.
ReflectionPair zero_mode(const dispersion::DispersionModel& model, double y, double a_um);

// Small-zeta TE coefficient for Drude: (omega_p^2 / (4 k^2))^2 (zeta / nu)^2. Inputs in eV.
double r2_asymptote(double omega_p, double nu, double k_perp, double zeta);

struct FresnelAmplitudes
{
  double tm;
  double te;
};

// Amplitudes for incidence from the vacuum side: tm = (eps p - s)/(eps p + s),
// te = (p - s)/(p + s) <= 0, with p = sqrt(1 + k^2/zeta^2).
FresnelAmplitudes fresnel(double eps, double k_perp, double zeta);

// TE reduced Green's function inside the gap. k, zeta in eV; z, z_prime in um;
// result in 1/eV.
double greens_te_interior(const SlabProfile& profile, double k, double zeta, double z, double z_prime);

// TE pressure from the Green's function route, contact term dropped, in mPa.
// Valid for constant permittivities; the zero mode is transparent (r = 0).
double te_pressure_from_greens(const SlabProfile& profile, double t_kelvin, double rel_tol = 1e-12);

}  // namespace casimir::reflection

#endif  // CASIMIR_REFLECTION_HPP
