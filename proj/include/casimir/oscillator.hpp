// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_OSCILLATOR_HPP
#define CASIMIR_OSCILLATOR_HPP

#include <array>
#include <cstddef>

// Two oscillators coupled through a third. Dimensionless units: a_i are
// squared eigenfrequencies, T is in the same units as the frequencies.
namespace casimir::oscillator
{

enum class CouplingKind
{
  Coordinate,  // c x_i x_3
  Momentum,    // (p_i - const x_3)^2, written in the momentum representation
};

struct OscillatorSystem
{
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 2.0;
  double c = 0.5;
  CouplingKind kind = CouplingKind::Coordinate;

  // Throws InstabilityError unless a1 a2 a3 > c^2 (a1 + a2) for Coordinate.
  void validate() const;
};

// A_3 used in D_i: a_3 + zeta^2, shifted by c^2/a_1 + c^2/a_2 for Momentum.
double a3_effective(const OscillatorSystem& sys, double zeta);

double d_factor(const OscillatorSystem& sys, int i, double zeta);

// A_1 A_2 A_3 (1 - D_1)(1 - D_2)(1 - D_1 D_2 / ((1 - D_1)(1 - D_2))).
double q_determinant(const OscillatorSystem& sys, double zeta);

// ln(1 - D_1 D_2 / ((1 - D_1)(1 - D_2))) at zeta.
double induced_log(const OscillatorSystem& sys, double zeta);

struct InducedThermo
{
  double free_energy = 0.0;
  double entropy = 0.0;
  std::size_t terms_used = 0;
  bool converged = true;
};

// (T/2) sum over all integer m of induced_log(2 pi m T).
InducedThermo induced_free_energy(const OscillatorSystem& sys, double t);

// m = 0 term alone, (T/2) induced_log(0).
double classical_free_energy(const OscillatorSystem& sys, double t);

// -dF/dT, Richardson-extrapolated central differences; free_energy is filled too.
InducedThermo induced_entropy(const OscillatorSystem& sys, double t);

// Eigenvalues (ascending) of the zeta = 0 coupling matrix
// [[a1, 0, c], [0, a2, c], [c, c, a3']] with a3' = a3_effective(sys, 0).
std::array<double, 3> normal_modes(const OscillatorSystem& sys);

}  // namespace casimir::oscillator

#endif  // CASIMIR_OSCILLATOR_HPP
