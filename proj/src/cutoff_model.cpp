// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/cutoff_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/ideal_metal.hpp"
#include "casimir/numerics.hpp"
#include "casimir/units.hpp"

namespace casimir::cutoff
{

namespace
{

void require_eps(double eps, const char* who)
{
  if (!(eps >= min_eps) || !std::isfinite(eps))
    throw DomainError(std::string(who) + ": eps must be finite and >= 25");
}

void require_t(double t, const char* who)
{
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError(std::string(who) + ": a T must be non-negative");
}

// Ideal-metal F a^3 at reduced temperature t, including t = 0.
double ideal_free_energy(double t)
{
  if (t == 0.0)
    return -units::pi * units::pi / 720.0;
  return ideal::ideal_thermo({2.0 * units::pi * t}).free_energy;
}

template <class F>
double entropy_of(F&& f, double t)
{
  if (t == 0.0)
    return 0.0;
  return -numerics::richardson_derivative(f, t, 1e-3 * t);
}

}  // namespace

double CutoffParams::gamma_c() const { return gamma * std::sqrt(eps); }

void CutoffParams::validate() const
{
  require_eps(eps, "CutoffParams");
  if (!(gamma > 0.0))
    throw DomainError("CutoffParams: gamma must be positive");
}

double step_te_coefficient(double p, double eps)
{
  if (!(p >= 1.0))
    throw DomainError("step_te_coefficient: p must be >= 1");
  return p < std::sqrt(eps) ? 1.0 : 0.0;
}

double free_energy_cutoff(double eps, double reduced_t)
{
  require_eps(eps, "free_energy_cutoff");
  require_t(reduced_t, "free_energy_cutoff");
  const double r = std::sqrt(eps);
  return ideal_free_energy(reduced_t) - ideal_free_energy(r * reduced_t) / (2.0 * r);
}

double te_free_energy_cutoff(double eps, double reduced_t)
{
  require_eps(eps, "te_free_energy_cutoff");
  require_t(reduced_t, "te_free_energy_cutoff");
  const double r = std::sqrt(eps);
  return 0.5 * ideal_free_energy(reduced_t) - ideal_free_energy(r * reduced_t) / (2.0 * r);
}

double entropy_cutoff(double eps, double reduced_t)
{
  require_eps(eps, "entropy_cutoff");
  require_t(reduced_t, "entropy_cutoff");
  return entropy_of([eps](double t) { return free_energy_cutoff(eps, t); }, reduced_t);
}

double te_entropy_cutoff(double eps, double reduced_t)
{
  require_eps(eps, "te_entropy_cutoff");
  require_t(reduced_t, "te_entropy_cutoff");
  return entropy_of([eps](double t) { return te_free_energy_cutoff(eps, t); }, reduced_t);
}

double te_entropy_lowT(double eps, double reduced_t)
{
  require_eps(eps, "te_entropy_lowT");
  require_t(reduced_t, "te_entropy_lowT");
  if (std::sqrt(eps) * reduced_t > low_t_limit)
    throw RegimeError("te_entropy_lowT: needs sqrt(eps) a T <= 0.1");
  return 3.0 * units::zeta3 / (4.0 * units::pi) * (1.0 - eps) * reduced_t * reduced_t;
}

double ideal_slope() { return units::zeta3 / (8.0 * units::pi); }

double free_energy_cutoff(double eps, double a_um, double t_kelvin)
{
  if (!(a_um > 0.0) || !(t_kelvin >= 0.0))
    throw DomainError("free_energy_cutoff: need a > 0 and T >= 0");
  return units::energy_to_si(free_energy_cutoff(eps, units::reduced_temperature(a_um, t_kelvin)), a_um);
}

double te_entropy_lowT(double eps, double a_um, double t_kelvin)
{
  if (!(a_um > 0.0) || !(t_kelvin >= 0.0))
    throw DomainError("te_entropy_lowT: need a > 0 and T >= 0");
  return units::entropy_to_si(te_entropy_lowT(eps, units::reduced_temperature(a_um, t_kelvin)), a_um);
}

}  // namespace casimir::cutoff
