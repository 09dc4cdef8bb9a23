// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_IDEAL_METAL_HPP
#define CASIMIR_IDEAL_METAL_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

// Closed-form thermodynamics of two ideal-metal plates. Results are scaled
// with the gap: P a^4, F a^3, U a^3, S a^2 in natural units, as functions of
// gamma = 2 pi a T.
namespace casimir::ideal
{

struct SeriesParams
{
  double gamma;
  std::size_t k_max = 10000000;
  int em_orders = 2;

  void validate() const;
};

struct IdealThermo
{
  double pressure = 0.0;
  double free_energy = 0.0;
  double internal_energy = 0.0;
  double entropy = 0.0;
  std::size_t terms_used = 0;
  bool converged = true;
};

// s_0 = coth x, s_1 = x / sinh^2 x, s_2 = 2 x^2 cosh x / sinh^3 x,
// s_3 = x^3 (6 + 4 sinh^2 x) / sinh^4 x.
double s_sum(int k, double x);

// Sums over k of k^-3 s_j(gamma k). Always the k-series.
IdealThermo exact_thermo(const SeriesParams& params);

// Poisson-resummed forms in u = pi^2 m / gamma. Pressure and free energy are the
// resummed series; entropy and internal energy are their gamma derivatives.
IdealThermo poisson_thermo(const SeriesParams& params);

// k-series, switching to the Poisson forms below gamma = 0.2.
IdealThermo ideal_thermo(const SeriesParams& params);
inline constexpr double poisson_crossover = 0.2;

// Leading low-temperature forms; gamma <= 0.5 or RegimeError.
IdealThermo lowT_expansions(const SeriesParams& params);
inline constexpr double low_t_gamma_limit = 0.5;

// int_0^inf x^-3 (1/x + x/3 - coth x) dx = zeta(3)/pi^2.
double constant_C(double rel_tol = 1e-12);

// Integrand of constant_C, finite at x = 0 (limit 1/45).
double constant_C_integrand(double x);

// B_n for 0 <= n <= 20, B_1 = -1/2.
double bernoulli(int n);

// int_0^inf f + f(0)/2 - sum_q B_2q/(2q)! f^(2q-1)(0), with odd_derivs[q-1] = f^(2q-1)(0).
double em_sum(const std::function<double(double)>& f, std::span<const double> odd_derivs,
              double rel_tol = 1e-12);

// Pressure summand of the perfect conductor, f(x) = -(2/(pi beta)) int_{2 pi x/beta}^inf
// q^2 / (e^{2q} - 1) dq with a = 1, and its odd derivatives at x = 0.
double perfect_conductor_summand(double x, double beta);
std::vector<double> perfect_conductor_odd_derivatives(double beta, int orders);

// sum over integer m of gamma / (gamma^2 + (pi m)^2) for |m| <= terms, with the
// remainder replaced by its midpoint integral. Equals coth gamma.
double cotangent_partial_fractions(double gamma, std::size_t terms);

// Ideal metal with the TE zero mode removed.
double mim_pressure(const SeriesParams& params);
// -(pi^2/240)(1 + (16/3) t^4) + zeta(3) t / (8 pi), t = a T; gamma <= 0.5.
double mim_pressure_lowT(double gamma);
// Ratio of the linear MIM term to the T = 0 pressure, 30 zeta(3) a T / pi^3.
double mim_linear_ratio(double reduced_t);
// -zeta(3) / (16 pi) in scaled units; in J/(K m^2) for the SI overload.
double mim_entropy_lowT();
double mim_entropy_lowT(double a_um, double t_kelvin);

}  // namespace casimir::ideal

#endif  // CASIMIR_IDEAL_METAL_HPP
