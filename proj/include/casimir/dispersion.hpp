// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_DISPERSION_HPP
#define CASIMIR_DISPERSION_HPP

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace casimir::optics
{
class SpectralTable;
}

namespace casimir::dispersion
{

// Permittivity of an ideal metal. Downstream code must branch on is_ideal(),
// never compare against a large finite number.
inline constexpr double ideal_eps = std::numeric_limits<double>::infinity();

inline bool is_ideal(double eps) { return std::isinf(eps); }

struct DrudeParams
{
  double omega_p;  // eV
  double nu;       // eV
};

struct PlasmaParams
{
  double omega_p;  // eV
};

// Bloch-Grueneisen resistivity rho(T) mapped to a relaxation frequency nu = K rho.
struct RelaxationParams
{
  double theta;     // Debye temperature, K
  double c_bg;      // resistivity scale, Ohm m
  double k_conv;    // eV / (Ohm m)
  double residual_nu = 0.0;  // additive constant, eV
};

// Room-temperature gold: omega_p = 9.0 eV, nu = 35 meV.
DrudeParams gold_drude();
// Gold: Theta = 175 K, C = 5.32e-8 Ohm m, K = 1.59e6 eV/(Ohm m).
RelaxationParams gold_relaxation();

double eps_drude(double zeta, const DrudeParams& params);
double eps_plasma(double zeta, const PlasmaParams& params);
double nu_bloch_gruneisen(double t_kelvin, const RelaxationParams& params);

// How the TE m = 0 term is treated for the ideal metal.
enum class TeZeroMode
{
  Included,  // eps = inf before m -> 0: B_0 = 1
  Excluded,  // "modified ideal metal": B_0 = 0
};

struct IdealMetal
{
  TeZeroMode te_zero_mode = TeZeroMode::Included;
};

struct ConstantEps
{
  double eps;
};

struct Drude
{
  DrudeParams params;
  std::optional<RelaxationParams> relaxation;
};

struct Plasma
{
  PlasmaParams params;
};

struct Tabulated
{
  std::shared_ptr<const optics::SpectralTable> table;
};

class DispersionModel
{
public:
  using Kind = std::variant<IdealMetal, ConstantEps, Drude, Plasma, Tabulated>;

  static DispersionModel ideal(TeZeroMode mode = TeZeroMode::Included);
  static DispersionModel constant(double eps);
  static DispersionModel drude(const DrudeParams& params);
  static DispersionModel drude(const DrudeParams& params, const RelaxationParams& relaxation);
  static DispersionModel plasma(const PlasmaParams& params);
  static DispersionModel tabulated(std::shared_ptr<const optics::SpectralTable> table);

  const Kind& kind() const noexcept { return kind_; }

  template <class T>
  const T* as() const noexcept
  {
    return std::get_if<T>(&kind_);
  }

  // True when eps(i zeta) diverges like 1/zeta as zeta -> 0 (finite relaxation).
  bool is_drude_like() const noexcept;

private:
  explicit DispersionModel(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

// eps(i zeta) at temperature T. Returns ideal_eps for IdealMetal.
double eval_model(const DispersionModel& model, double zeta, double t_kelvin);

// Drude with a Bloch-Grueneisen nu(T) becomes plain Drude with nu fixed at T,
// so repeated evaluations skip the quadrature. Other models are returned unchanged.
DispersionModel at_temperature(const DispersionModel& model, double t_kelvin);

std::string describe(const DispersionModel& model);

}  // namespace casimir::dispersion

#endif  // CASIMIR_DISPERSION_HPP
