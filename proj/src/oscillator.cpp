// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/oscillator.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/units.hpp"

namespace casimir::oscillator
{

namespace
{

constexpr double sum_rel_tol = 1e-14;
constexpr std::size_t sum_cap = 1000000;

double a_of(const OscillatorSystem& sys, int i)
{
  if (i == 1)
    return sys.a1;
  if (i == 2)
    return sys.a2;
  throw DomainError("oscillator: index must be 1 or 2");
}

}  // namespace

void OscillatorSystem::validate() const
{
  if (!(a1 > 0.0) || !(a2 > 0.0) || !(a3 > 0.0))
    throw DomainError("OscillatorSystem: a1, a2, a3 must be positive");
  if (!std::isfinite(c))
    throw DomainError("OscillatorSystem: coupling must be finite");
  if (kind == CouplingKind::Coordinate && !(a1 * a2 * a3 > c * c * (a1 + a2)))
    throw InstabilityError("OscillatorSystem: a1 a2 a3 <= c^2 (a1 + a2)");
}

double a3_effective(const OscillatorSystem& sys, double zeta)
{
  const double a3 = sys.a3 + zeta * zeta;
  if (sys.kind == CouplingKind::Momentum)
    return a3 + sys.c * sys.c / sys.a1 + sys.c * sys.c / sys.a2;
  return a3;
}

double d_factor(const OscillatorSystem& sys, int i, double zeta)
{
  sys.validate();
  const double ai = a_of(sys, i);
  const double z2 = zeta * zeta;
  const double c2 = sys.c * sys.c;
  const double a3 = a3_effective(sys, zeta);
  if (sys.kind == CouplingKind::Coordinate)
    return c2 / ((ai + z2) * a3);
  return -z2 * c2 / (ai * (ai + z2) * a3);
}

double q_determinant(const OscillatorSystem& sys, double zeta)
{
  const double d1 = d_factor(sys, 1, zeta);
  const double d2 = d_factor(sys, 2, zeta);
  const double z2 = zeta * zeta;
  const double f1 = 1.0 - d1;
  const double f2 = 1.0 - d2;
  const double induced = 1.0 - d1 * d2 / (f1 * f2);
  if (!(f1 > 0.0) || !(f2 > 0.0) || !(induced > 0.0))
    throw InstabilityError("q_determinant: non-positive factor");
  return (sys.a1 + z2) * (sys.a2 + z2) * a3_effective(sys, zeta) * f1 * f2 * induced;
}

double induced_log(const OscillatorSystem& sys, double zeta)
{
  const double d1 = d_factor(sys, 1, zeta);
  const double d2 = d_factor(sys, 2, zeta);
  const double x = d1 * d2 / ((1.0 - d1) * (1.0 - d2));
  if (!(x < 1.0))
    throw InstabilityError("induced_log: non-positive induced factor");
  return std::log1p(-x);
}

double classical_free_energy(const OscillatorSystem& sys, double t)
{
  if (!(t > 0.0))
    throw DomainError("classical_free_energy: T must be positive");
  return 0.5 * t * induced_log(sys, 0.0);
}

InducedThermo induced_free_energy(const OscillatorSystem& sys, double t)
{
  sys.validate();
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError("induced_free_energy: T must be positive");
  // D is even in zeta: m = 0 plus twice m >= 1.
  numerics::CompensatedSum sum;
  sum.add(induced_log(sys, 0.0));
  InducedThermo r;
  r.converged = false;
  double prev = 0.0;
  double last = 0.0;
  std::size_t m = 1;
  for (; m <= sum_cap; ++m)
  {
    const double term = 2.0 * induced_log(sys, 2.0 * units::pi * static_cast<double>(m) * t);
    sum.add(term);
    prev = last;
    last = term;
    if (std::abs(term) < sum_rel_tol * std::abs(sum.value()) || term == 0.0)
    {
      r.converged = true;
      break;
    }
  }
  r.terms_used = std::min(m, sum_cap) + 1;
  // Remainder of a power-law tail, fitted to the last two terms.
  if (r.converged && m >= 2 && prev != 0.0 && last != 0.0 && prev / last > 1.0)
  {
    const double md = static_cast<double>(m);
    const double n = std::log(prev / last) / std::log(md / (md - 1.0));
    if (n > 1.0)
      sum.add(last * std::pow(md, n) / ((n - 1.0) * std::pow(md + 0.5, n - 1.0)));
  }
  r.free_energy = 0.5 * t * sum.value();
  return r;
}

InducedThermo induced_entropy(const OscillatorSystem& sys, double t)
{
  auto r = induced_free_energy(sys, t);
  bool converged = r.converged;
  auto f = [&](double tt) {
    const auto v = induced_free_energy(sys, tt);
    converged = converged && v.converged;
    return v.free_energy;
  };
  r.entropy = -numerics::richardson_derivative(f, t, 1e-3 * t);
  r.converged = converged;
  return r;
}

std::array<double, 3> normal_modes(const OscillatorSystem& sys)
{
  sys.validate();
  Eigen::Matrix3d m;
  m << sys.a1, 0.0, sys.c, 0.0, sys.a2, sys.c, sys.c, sys.c, a3_effective(sys, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

}  // namespace casimir::oscillator
