// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "casimir/errors.hpp"
#include "casimir/oscillator.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::oscillator;

namespace
{

OscillatorSystem random_system(std::mt19937_64& rng, CouplingKind kind)
{
  std::uniform_real_distribution<double> a(0.1, 3.0);
  std::uniform_real_distribution<double> u(0.0, 0.99);
  OscillatorSystem s;
  s.a1 = a(rng);
  s.a2 = a(rng);
  s.a3 = a(rng);
  s.c = std::sqrt(u(rng) * s.a1 * s.a2 * s.a3 / (s.a1 + s.a2));
  s.kind = kind;
  return s;
}

// Determinant of the full 3x3 matrix at zeta.
double direct_determinant(const OscillatorSystem& s, double zeta)
{
  using C = std::complex<double>;
  const double z2 = zeta * zeta;
  Eigen::Matrix3cd m;
  if (s.kind == CouplingKind::Coordinate)
  {
    m << s.a1 + z2, 0.0, s.c, 0.0, s.a2 + z2, s.c, s.c, s.c, s.a3 + z2;
  }
  else
  {
    const C x1 = C(0.0, zeta * s.c / std::sqrt(s.a1));
    const C x2 = C(0.0, zeta * s.c / std::sqrt(s.a2));
    const double a3 = s.a3 + z2 + s.c * s.c / s.a1 + s.c * s.c / s.a2;
    m << s.a1 + z2, 0.0, x1, 0.0, s.a2 + z2, x2, x1, x2, a3;
  }
  return m.determinant().real();
}

}  // namespace

TEST_CASE("determinant without coupling")
{
  for (auto kind : {CouplingKind::Coordinate, CouplingKind::Momentum})
  {
    const OscillatorSystem s{1.5, 0.7, 2.2, 0.0, kind};
    for (double z : {0.0, 0.4, 3.0})
      CHECK(q_determinant(s, z) == doctest::Approx((1.5 + z * z) * (0.7 + z * z) * (2.2 + z * z)).epsilon(1e-15));
    CHECK(induced_free_energy(s, 0.3).free_energy == 0.0);
  }
}

TEST_CASE("factored determinant equals the direct determinant")
{
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> zeta(0.0, 10.0);
  for (int i = 0; i < 1000; ++i)
  {
    const auto s = random_system(rng, i % 2 ? CouplingKind::Momentum : CouplingKind::Coordinate);
    const double z = zeta(rng);
    CHECK(q_determinant(s, z) == doctest::Approx(direct_determinant(s, z)).epsilon(1e-12));
  }
}

TEST_CASE("D factors")
{
  const OscillatorSystem coord{1.0, 1.0, 2.0, 0.5, CouplingKind::Coordinate};
  const OscillatorSystem mom{1.0, 1.0, 2.0, 0.5, CouplingKind::Momentum};
  CHECK(d_factor(coord, 1, 0.0) == doctest::Approx(0.25 / 2.0).epsilon(1e-15));
  CHECK(d_factor(mom, 1, 0.0) == 0.0);
  CHECK(d_factor(mom, 2, 0.0) == 0.0);
  CHECK(induced_log(mom, 0.0) == 0.0);
  CHECK(a3_effective(mom, 0.0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(a3_effective(coord, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  // Coordinate coupling falls off as zeta^-4.
  const double r = d_factor(coord, 1, 200.0) / d_factor(coord, 1, 400.0);
  CHECK(r == doctest::Approx(16.0).epsilon(1e-3));
  for (double z = 0.0; z < 50.0; z += 0.37)
    for (int i : {1, 2})
      CHECK(d_factor(mom, i, z) <= 0.0);
  CHECK_THROWS_AS(d_factor(coord, 3, 1.0), DomainError);
}

TEST_CASE("classical limits")
{
  const OscillatorSystem mom{1.0, 1.0, 2.0, 0.5, CouplingKind::Momentum};
  const OscillatorSystem coord{1.0, 1.3, 2.0, 0.5, CouplingKind::Coordinate};
  CHECK(classical_free_energy(mom, 3.0) == 0.0);
  const double f1 = classical_free_energy(coord, 1.0);
  CHECK(f1 < 0.0);
  CHECK(classical_free_energy(coord, 2.5) == doctest::Approx(2.5 * f1).epsilon(1e-15));
  // Against the explicit m = 0 product.
  const double d1 = 0.25 / (1.0 * 2.0);
  const double d2 = 0.25 / (1.3 * 2.0);
  CHECK(f1 == doctest::Approx(0.5 * std::log(1.0 - d1 * d2 / ((1.0 - d1) * (1.0 - d2)))).epsilon(1e-14));
  // The full sum approaches the classical term at high temperature.
  CHECK(induced_free_energy(coord, 50.0).free_energy == doctest::Approx(classical_free_energy(coord, 50.0)).epsilon(1e-4));
  CHECK_THROWS_AS(classical_free_energy(coord, 0.0), DomainError);
}

TEST_CASE("induced free energy is never positive")
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i)
  {
    const auto s = random_system(rng, i % 2 ? CouplingKind::Momentum : CouplingKind::Coordinate);
    for (double t : {0.03, 0.3, 3.0})
    {
      const auto r = induced_free_energy(s, t);
      CHECK(r.converged);
      CHECK(r.free_energy <= 0.0);
    }
  }
}

TEST_CASE("momentum coupling: free energy rises with T and entropy turns negative")
{
  const OscillatorSystem mom{1.0, 1.0, 2.0, 0.5, CouplingKind::Momentum};
  bool rises = false;
  bool negative_s = false;
  double prev = induced_free_energy(mom, 0.02).free_energy;
  double f_min = prev;
  for (double t = 0.04; t < 5.0; t *= 1.3)
  {
    const double f = induced_free_energy(mom, t).free_energy;
    rises = rises || f > prev;
    prev = f;
    f_min = std::min(f_min, f);
    negative_s = negative_s || induced_entropy(mom, t).entropy < 0.0;
  }
  CHECK(rises);
  CHECK(negative_s);
  CHECK(std::abs(induced_free_energy(mom, 200.0).free_energy) < 1e-3 * std::abs(f_min));
  const auto hot = induced_entropy(mom, 50.0);
  CHECK(hot.entropy < 0.0);
  CHECK(std::abs(hot.entropy) < 1e-3 * std::abs(induced_entropy(mom, 0.5).entropy));
}

TEST_CASE("induced entropy vanishes as T -> 0")
{
  for (auto kind : {CouplingKind::Coordinate, CouplingKind::Momentum})
  {
    const OscillatorSystem s{1.0, 1.0, 2.0, 0.5, kind};
    double peak = 0.0;
    for (double t = 0.05; t < 3.0; t *= 1.4)
      peak = std::max(peak, std::abs(induced_entropy(s, t).entropy));
    const auto cold = induced_entropy(s, 0.01);
    CHECK(cold.converged);
    CHECK(std::abs(cold.entropy) < 1e-6 * peak);
  }
}

TEST_CASE("normal modes")
{
  const OscillatorSystem coord{1.0, 1.3, 2.0, 0.5, CouplingKind::Coordinate};
  const auto w = normal_modes(coord);
  CHECK(w[0] <= w[1]);
  CHECK(w[1] <= w[2]);
  CHECK(w[0] * w[1] * w[2] == doctest::Approx(q_determinant(coord, 0.0)).epsilon(1e-10));
  CHECK(w[0] + w[1] + w[2] == doctest::Approx(4.3).epsilon(1e-12));
  // Momentum: the shift in A_3 cancels, leaving a1 a2 a3.
  const OscillatorSystem mom{1.0, 1.3, 2.0, 0.5, CouplingKind::Momentum};
  const auto v = normal_modes(mom);
  CHECK(v[0] * v[1] * v[2] == doctest::Approx(1.0 * 1.3 * 2.0).epsilon(1e-10));
}

TEST_CASE("unstable or invalid systems are rejected")
{
  const OscillatorSystem bad{1.0, 1.0, 1.0, 0.8, CouplingKind::Coordinate};
  CHECK_THROWS_AS(bad.validate(), InstabilityError);
  CHECK_THROWS_AS(induced_free_energy(bad, 1.0), InstabilityError);
  CHECK_THROWS_AS(q_determinant(bad, 0.0), InstabilityError);
  CHECK_NOTHROW((OscillatorSystem{1.0, 1.0, 1.0, 0.8, CouplingKind::Momentum}.validate()));
  CHECK_THROWS_AS((OscillatorSystem{0.0, 1.0, 1.0, 0.1}.validate()), DomainError);
  CHECK_THROWS_AS(induced_free_energy(OscillatorSystem{}, 0.0), DomainError);
}
