// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/reflection.hpp"

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/units.hpp"

namespace casimir::reflection
{

namespace
{

void require_eps(double eps, const char* who)
{
  if (!(eps >= 1.0))
    throw DomainError(std::string(who) + ": permittivity must be >= 1");
}

// Reflection amplitude (k_a - k_b)/(k_a + k_b) with k_a^2 - k_b^2 = diff passed in.
double amplitude(double ka, double kb, double diff) { return diff / ((ka + kb) * (ka + kb)); }

}  // namespace

LifshitzVariables variables(double eps, double p)
{
  if (!(p >= 1.0))
    throw DomainError("reflection: p must be >= 1");
  if (dispersion::is_ideal(eps))
    return {p, dispersion::ideal_eps, eps};
  require_eps(eps, "reflection");
  return {p, std::sqrt(eps - 1.0 + p * p), eps};
}

ReflectionPair coefficients(double eps, double p)
{
  const auto v = variables(eps, p);
  if (dispersion::is_ideal(eps))
    return {1.0, 1.0};
  const double em1 = eps - 1.0;
  // s - p = (eps - 1)/(s + p); eps p - s = (eps - 1)((eps + 1) p^2 - 1)/(eps p + s).
  const double te = em1 / ((v.s + p) * (v.s + p));
  const double eps_p_plus_s = eps * p + v.s;
  const double tm = em1 * ((eps + 1.0) * p * p - 1.0) / (eps_p_plus_s * eps_p_plus_s);
  return {tm * tm, te * te};
}

ReflectionPair zero_mode(const dispersion::DispersionModel& model, double y, double a_um)
{
  using namespace dispersion;
  struct Visitor
  {
    double y;
    double a_um;

    ReflectionPair operator()(const IdealMetal& m) const
    {
      return {1.0, m.te_zero_mode == TeZeroMode::Included ? 1.0 : 0.0};
    }
    ReflectionPair operator()(const ConstantEps& c) const
    {
      const double r = (c.eps - 1.0) / (c.eps + 1.0);
      return {r * r, 0.0};
    }
    ReflectionPair operator()(const Drude&) const { return {1.0, 0.0}; }
    ReflectionPair operator()(const Tabulated&) const { return {1.0, 0.0}; }
    ReflectionPair operator()(const Plasma& p) const
    {
      const double w = p.params.omega_p * units::gap_natural(a_um);
      const double root = std::sqrt(y * y + w * w);
      // (y - root)/(y + root) with the difference taken as -w^2/(y + root).
      const double r = w * w / ((y + root) * (y + root));
      return {1.0, r * r};
    }
  };
  return std::visit(Visitor{y, a_um}, model.kind());
}

double r2_asymptote(double omega_p, double nu, double k_perp, double zeta)
{
  if (!(k_perp > 0.0))
    throw DomainError("r2_asymptote: k_perp must be positive");
  if (!(omega_p > 0.0) || !(nu > 0.0) || !(zeta > 0.0))
    throw DomainError("r2_asymptote: omega_p, nu and zeta must be positive");
  const double f = omega_p * omega_p / (4.0 * k_perp * k_perp) * (zeta / nu);
  return f * f;
}

FresnelAmplitudes fresnel(double eps, double k_perp, double zeta)
{
  if (!(zeta > 0.0))
    throw DomainError("fresnel: zeta must be positive");
  if (!(k_perp >= 0.0))
    throw DomainError("fresnel: k_perp must be non-negative");
  const double ratio = k_perp / zeta;
  const double p = std::sqrt(1.0 + ratio * ratio);
  if (dispersion::is_ideal(eps))
    return {1.0, -1.0};
  const auto v = variables(eps, p);
  const double em1 = eps - 1.0;
  const double te = -em1 / ((v.s + p) * (v.s + p));
  const double eps_p_plus_s = eps * p + v.s;
  const double tm = em1 * ((eps + 1.0) * p * p - 1.0) / (eps_p_plus_s * eps_p_plus_s);
  return {tm, te};
}

double greens_te_interior(const SlabProfile& profile, double k, double zeta, double z, double z_prime)
{
  require_eps(profile.eps1, "greens_te_interior");
  require_eps(profile.eps2, "greens_te_interior");
  require_eps(profile.eps3, "greens_te_interior");
  if (!(profile.a_um > 0.0))
    throw DomainError("greens_te_interior: gap must be positive");
  if (!(z > 0.0 && z < profile.a_um && z_prime > 0.0 && z_prime < profile.a_um))
    throw DomainError("greens_te_interior: z and z' must lie strictly inside the gap");
  if (!(k > 0.0) || !(zeta >= 0.0))
    throw DomainError("greens_te_interior: need k > 0 and zeta >= 0");

  const double a = units::gap_natural(profile.a_um);
  const double zn = units::gap_natural(z);
  const double zpn = units::gap_natural(z_prime);
  const double z2 = zeta * zeta;
  const double k3 = std::sqrt(k * k + z2 * profile.eps3);
  const double free = std::exp(-k3 * std::abs(zn - zpn)) / (2.0 * k3);
  if (zeta == 0.0)
    return free;

  const double k1 = std::sqrt(k * k + z2 * profile.eps1);
  const double k2 = std::sqrt(k * k + z2 * profile.eps2);
  if (k3 == k1 || k3 == k2)
    throw SingularConfiguration("greens_te_interior: kappa_3 equals an outer kappa");

  // r_i = (k3 - k_i)/(k3 + k_i); d^{-1} = r1 r2 e^{-2 k3 a} / (1 - r1 r2 e^{-2 k3 a}).
  // The terms of the interior expression are regrouped with these so that no
  // exponential grows with k3 a.
  const double r1 = (k3 - k1) / (k3 + k1);
  const double r2 = (k3 - k2) / (k3 + k2);
  const double e2a = std::exp(-2.0 * k3 * a);
  const double delta = 1.0 - r1 * r2 * e2a;
  const double d_inv = r1 * r2 * e2a / delta;

  const double sum_z = zn + zpn;
  const double diff_z = zn - zpn;
  double g = std::exp(-k3 * std::abs(diff_z));
  g += r1 * std::exp(-k3 * sum_z);
  g += d_inv * (std::exp(k3 * diff_z) + std::exp(-k3 * diff_z));
  g += r2 * std::exp(-k3 * (2.0 * a - sum_z)) / delta;
  g += d_inv * r1 * std::exp(-k3 * sum_z);
  return g / (2.0 * k3);
}

double te_pressure_from_greens(const SlabProfile& profile, double t_kelvin, double rel_tol)
{
  require_eps(profile.eps1, "te_pressure_from_greens");
  require_eps(profile.eps2, "te_pressure_from_greens");
  require_eps(profile.eps3, "te_pressure_from_greens");
  if (!(profile.a_um > 0.0) || !(t_kelvin > 0.0))
    throw DomainError("te_pressure_from_greens: need a > 0 and T > 0");
  if (profile.eps1 == profile.eps3 || profile.eps2 == profile.eps3)
    return 0.0;

  // Gap-scaled: y = kappa_3 a, t = a T; the zero mode has r = 0.
  const double t = units::reduced_temperature(profile.a_um, t_kelvin);
  const double d1 = profile.eps1 - profile.eps3;
  const double d2 = profile.eps2 - profile.eps3;

  numerics::CompensatedSum sum;
  int small_terms = 0;
  for (std::size_t m = 1; m <= 1000000; ++m)
  {
    const double za = 2.0 * units::pi * static_cast<double>(m) * t;
    const double za2 = za * za;
    auto integrand = [&](double y) {
      const double y1 = std::sqrt(y * y + za2 * d1);
      const double y2 = std::sqrt(y * y + za2 * d2);
      const double r1 = amplitude(y, y1, -za2 * d1);
      const double r2 = amplitude(y, y2, -za2 * d2);
      const double rr = r1 * r2 * std::exp(-2.0 * y);
      return y * y * rr / (1.0 - rr);
    };
    const double y0 = za * std::sqrt(profile.eps3);
    const double term = numerics::integrate(integrand, y0, y0 + 40.0, 0.01 * rel_tol).value;
    sum.add(term);
    if (std::abs(term) < rel_tol * std::abs(sum.value()))
    {
      if (++small_terms == 3)
        break;
    }
    else
      small_terms = 0;
  }
  return units::pressure_to_mpa(-t / units::pi * sum.value(), profile.a_um);
}

}  // namespace casimir::reflection
