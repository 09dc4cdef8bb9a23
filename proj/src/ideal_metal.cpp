// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/ideal_metal.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/units.hpp"

namespace casimir::ideal
{

namespace
{

using units::pi;
using units::zeta3;

constexpr double zeta4 = pi * pi * pi * pi / 90.0;

struct Hyperbolic
{
  double q;   // e^{-2x}
  double om;  // 1 - q
};

Hyperbolic hyperbolic(double x) { return {std::exp(-2.0 * x), -std::expm1(-2.0 * x)}; }

// coth x - 1, 1/sinh^2 x, cosh x / sinh^3 x in terms of q = e^{-2x}.
double coth_minus_one(const Hyperbolic& h) { return 2.0 * h.q / h.om; }
double csch2(const Hyperbolic& h) { return 4.0 * h.q / (h.om * h.om); }
double cosh_csch3(const Hyperbolic& h) { return 4.0 * h.q * (1.0 + h.q) / (h.om * h.om * h.om); }

void require_low_t(double gamma, const char* who)
{
  if (!(gamma > 0.0))
    throw DomainError(std::string(who) + ": gamma must be positive");
  if (gamma > low_t_gamma_limit)
    throw RegimeError(std::string(who) + ": low-temperature form needs gamma <= 0.5");
}

constexpr std::array<double, 21> bernoulli_table = {
  1.0,           -1.0 / 2.0,     1.0 / 6.0, 0.0, -1.0 / 30.0,      0.0, 1.0 / 42.0,     0.0,
  -1.0 / 30.0,   0.0,            5.0 / 66.0, 0.0, -691.0 / 2730.0, 0.0, 7.0 / 6.0,      0.0,
  -3617.0 / 510.0, 0.0,          43867.0 / 798.0, 0.0, -174611.0 / 330.0,
};

double factorial(int n)
{
  double f = 1.0;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

}  // namespace

void SeriesParams::validate() const
{
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw DomainError("SeriesParams: gamma must be positive and finite");
  if (k_max < 1)
    throw DomainError("SeriesParams: k_max must be >= 1");
  if (em_orders < 0 || em_orders > 10)
    throw DomainError("SeriesParams: em_orders must lie in [0, 10]");
}

double s_sum(int k, double x)
{
  if (!(x > 0.0))
    throw DomainError("s_sum: x must be positive");
  const auto h = hyperbolic(x);
  switch (k)
  {
  case 0:
    return 1.0 + coth_minus_one(h);
  case 1:
    return x * csch2(h);
  case 2:
    return 2.0 * x * x * cosh_csch3(h);
  case 3:
  {
    const double c2 = csch2(h);
    return x * x * x * (6.0 * c2 * c2 + 4.0 * c2);
  }
  default:
    throw DomainError("s_sum: order must be 0, 1, 2 or 3");
  }
}

IdealThermo exact_thermo(const SeriesParams& params)
{
  params.validate();
  const double g = params.gamma;
  const double t = g / (2.0 * pi);

  // s_0 = 1 + (coth - 1); the constant parts sum to zeta(3) in closed form.
  numerics::CompensatedSum f_sum, p_sum, u_sum, s_sum_;
  IdealThermo r;
  r.converged = false;
  for (std::size_t k = 1; k <= params.k_max; ++k)
  {
    const double kd = static_cast<double>(k);
    const double x = g * kd;
    const double w = 1.0 / (kd * kd * kd);
    const auto h = hyperbolic(x);
    const double c0 = coth_minus_one(h);
    const double s1 = x * csch2(h);
    const double s2 = 2.0 * x * x * cosh_csch3(h);
    f_sum.add(w * (s1 + c0));
    p_sum.add(w * (s2 + 2.0 * s1 + 2.0 * c0));
    u_sum.add(w * s2);
    s_sum_.add(w * (s2 - s1 - c0));
    r.terms_used = k;
    const double eps = std::numeric_limits<double>::epsilon() * 0.01;
    if (x > 1.0 && w * (s1 + c0) <= eps * std::abs(f_sum.value()) && w * s2 <= eps * std::abs(u_sum.value()))
    {
      r.converged = true;
      break;
    }
  }
  const double pre = -t / (8.0 * pi);
  r.free_energy = pre * (zeta3 + f_sum.value());
  r.pressure = pre * (2.0 * zeta3 + p_sum.value());
  r.internal_energy = pre * u_sum.value();
  r.entropy = -(s_sum_.value() - zeta3) / (8.0 * pi);
  return r;
}

IdealThermo poisson_thermo(const SeriesParams& params)
{
  params.validate();
  const double g = params.gamma;
  const double step = pi * pi / g;
  const double z3 = zeta3 / (step * step * step);                  // sum u^-3
  const double z4 = zeta4 / (step * step * step * step);           // sum u^-4

  numerics::CompensatedSum p_rem, f_rem, d_rem;
  IdealThermo r;
  r.converged = false;
  for (std::size_t m = 1; m <= params.k_max; ++m)
  {
    const double u = step * static_cast<double>(m);
    const auto h = hyperbolic(u);
    const double c3 = cosh_csch3(h);
    const double c2 = csch2(h);
    const double c0 = coth_minus_one(h);
    const double p_term = c3 / u;
    const double f_term = c0 / (u * u * u) + c2 / (u * u);
    const double d_term = -3.0 * c2 / (u * u) - 3.0 * c0 / (u * u * u) - 2.0 * c3 / u;
    p_rem.add(p_term);
    f_rem.add(f_term);
    d_rem.add(d_term);
    r.terms_used = m;
    if (h.q < 1e-18)
    {
      r.converged = true;
      break;
    }
  }
  const double sum_g = z3 - 2.0 * z4 + f_rem.value();
  const double sum_ug = -3.0 * z3 + 8.0 * z4 + d_rem.value();
  r.pressure = -(pi * pi / 240.0) * (1.0 + 30.0 * (z4 - p_rem.value()));
  r.free_energy = -(pi * pi / 720.0) * (1.0 + 45.0 * sum_g);
  r.entropy = -(pi * pi * pi / (8.0 * g)) * sum_ug;
  r.internal_energy = r.free_energy - (pi * pi / 16.0) * sum_ug;
  return r;
}

IdealThermo ideal_thermo(const SeriesParams& params)
{
  params.validate();
  return params.gamma < poisson_crossover ? poisson_thermo(params) : exact_thermo(params);
}

IdealThermo lowT_expansions(const SeriesParams& params)
{
  params.validate();
  require_low_t(params.gamma, "lowT_expansions");
  const double t = params.gamma / (2.0 * pi);
  const double x = 2.0 * t;  // 2a/beta
  const double x3 = x * x * x;
  const double x4 = x3 * x;
  const double pi3 = pi * pi * pi;
  IdealThermo r;
  r.pressure = -(pi * pi / 240.0) * (1.0 + x4 / 3.0);
  r.free_energy = -(pi * pi / 720.0) * (1.0 + 45.0 * x3 * zeta3 / pi3 - x4);
  r.internal_energy = -(pi * pi / 720.0) * (1.0 - 90.0 * x3 * zeta3 / pi3 + 3.0 * x4);
  r.entropy = 3.0 * zeta3 / (2.0 * pi) * t * t - 4.0 * pi * pi / 45.0 * t * t * t;
  return r;
}

double constant_C_integrand(double x)
{
  if (x < 0.0)
    throw DomainError("constant_C_integrand: x must be non-negative");
  if (x < 0.5)
  {
    // -(sum_{n>=2} 2^{2n} B_{2n} x^{2n-1} / (2n)!) / x^3
    double sum = 0.0;
    for (int n = 10; n >= 2; --n)
      sum = sum * x * x + std::ldexp(bernoulli(2 * n), 2 * n) / factorial(2 * n);
    return -sum;
  }
  const auto h = hyperbolic(x);
  return (1.0 / x + x / 3.0 - 1.0 - coth_minus_one(h)) / (x * x * x);
}

double constant_C(double rel_tol)
{
  const auto r = numerics::integrate(constant_C_integrand, 0.0, std::numeric_limits<double>::infinity(), rel_tol);
  return r.value;
}

double bernoulli(int n)
{
  if (n < 0 || n > 20)
    throw DomainError("bernoulli: index must lie in [0, 20]");
  return bernoulli_table[static_cast<std::size_t>(n)];
}

double em_sum(const std::function<double(double)>& f, std::span<const double> odd_derivs, double rel_tol)
{
  if (odd_derivs.size() > 10)
    throw DomainError("em_sum: at most ten correction orders");
  const double integral = numerics::integrate(f, 0.0, std::numeric_limits<double>::infinity(), rel_tol).value;
  double estimate = integral + 0.5 * f(0.0);
  for (std::size_t q = 1; q <= odd_derivs.size(); ++q)
  {
    const int n = 2 * static_cast<int>(q);
    estimate -= bernoulli(n) / factorial(n) * odd_derivs[q - 1];
  }
  return estimate;
}

double perfect_conductor_summand(double x, double beta)
{
  if (x < 0.0 || !(beta > 0.0))
    throw DomainError("perfect_conductor_summand: need x >= 0 and beta > 0");
  auto g = [](double q) { return q == 0.0 ? 0.0 : q * q / std::expm1(2.0 * q); };
  const double lo = 2.0 * pi * x / beta;
  const double inner = numerics::integrate(g, lo, std::numeric_limits<double>::infinity(), 1e-13).value;
  return -2.0 / (pi * beta) * inner;
}

std::vector<double> perfect_conductor_odd_derivatives(double beta, int orders)
{
  if (!(beta > 0.0) || orders < 0 || orders > 10)
    throw DomainError("perfect_conductor_odd_derivatives: need beta > 0 and 0 <= orders <= 10");
  // f^(j)(0) = (2/(pi beta)) c^j g^(j-1)(0), c = 2 pi / beta, g(q) = q^2/(e^{2q} - 1),
  // g^(i)(0) = i B_{i-1} 2^{i-2}.
  const double c = 2.0 * pi / beta;
  std::vector<double> out;
  for (int k = 1; k <= orders; ++k)
  {
    const int j = 2 * k - 1;
    const int i = j - 1;
    const double gi = i == 0 ? 0.0 : i * bernoulli(i - 1) * std::ldexp(1.0, i - 2);
    out.push_back(2.0 / (pi * beta) * std::pow(c, j) * gi);
  }
  return out;
}

double cotangent_partial_fractions(double gamma, std::size_t terms)
{
  if (!(gamma > 0.0))
    throw DomainError("cotangent_partial_fractions: gamma must be positive");
  numerics::CompensatedSum sum;
  // Smallest terms first.
  const double tail = 2.0 / pi * (pi / 2.0 - std::atan(pi * (static_cast<double>(terms) + 0.5) / gamma));
  sum.add(tail);
  for (std::size_t m = terms; m >= 1; --m)
  {
    const double pm = pi * static_cast<double>(m);
    sum.add(2.0 * gamma / (gamma * gamma + pm * pm));
  }
  sum.add(1.0 / gamma);
  return sum.value();
}

double mim_pressure(const SeriesParams& params)
{
  const auto sdm = exact_thermo(params);
  return sdm.pressure + params.gamma / (2.0 * pi) * zeta3 / (8.0 * pi);
}

double mim_pressure_lowT(double gamma)
{
  require_low_t(gamma, "mim_pressure_lowT");
  const double t = gamma / (2.0 * pi);
  return -(pi * pi / 240.0) * (1.0 + 16.0 / 3.0 * t * t * t * t) + zeta3 * t / (8.0 * pi);
}

double mim_linear_ratio(double reduced_t)
{
  if (!(reduced_t >= 0.0))
    throw DomainError("mim_linear_ratio: a T must be non-negative");
  return 30.0 * zeta3 / (pi * pi * pi) * reduced_t;
}

double mim_entropy_lowT() { return -zeta3 / (16.0 * pi); }

double mim_entropy_lowT(double a_um, double t_kelvin)
{
  if (!(a_um > 0.0) || !(t_kelvin > 0.0))
    throw DomainError("mim_entropy_lowT: need a > 0 and T > 0");
  require_low_t(2.0 * pi * units::reduced_temperature(a_um, t_kelvin), "mim_entropy_lowT");
  return units::entropy_to_si(mim_entropy_lowT(), a_um);
}

}  // namespace casimir::ideal
