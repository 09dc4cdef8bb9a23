// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/dispersion.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/optical_data.hpp"

namespace casimir::dispersion
{

namespace
{

void require_positive_zeta(double zeta, const char* who)
{
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw DomainError(std::string(who) + ": imaginary frequency must be positive and finite");
}

void validate(const DrudeParams& p)
{
  if (!(p.omega_p > 0.0) || !(p.nu > 0.0))
    throw DomainError("Drude parameters require omega_p > 0 and nu > 0");
}

void validate(const PlasmaParams& p)
{
  if (!(p.omega_p > 0.0))
    throw DomainError("plasma parameters require omega_p > 0");
}

void validate(const RelaxationParams& p)
{
  if (!(p.theta > 0.0) || !(p.c_bg > 0.0) || !(p.k_conv > 0.0))
    throw DomainError("relaxation parameters must be strictly positive");
  if (p.residual_nu < 0.0)
    throw DomainError("residual relaxation frequency must be non-negative");
}

// x^5 e^x / (e^x - 1)^2, written in e^-x so large x does not overflow.
double bg_integrand(double x)
{
  if (x < 1e-4)
    return x * x * x * (1.0 - x * x / 12.0);
  const double em1 = -std::expm1(-x);
  const double x2 = x * x;
  return x2 * x2 * x * std::exp(-x) / (em1 * em1);
}

}  // namespace

DrudeParams gold_drude() { return {9.0, 0.035}; }

RelaxationParams gold_relaxation() { return {175.0, 5.32e-8, 1.59e6, 0.0}; }

double eps_drude(double zeta, const DrudeParams& params)
{
  require_positive_zeta(zeta, "eps_drude");
  validate(params);
  return 1.0 + params.omega_p * params.omega_p / (zeta * (zeta + params.nu));
}

double eps_plasma(double zeta, const PlasmaParams& params)
{
  require_positive_zeta(zeta, "eps_plasma");
  validate(params);
  return 1.0 + params.omega_p * params.omega_p / (zeta * zeta);
}

double nu_bloch_gruneisen(double t_kelvin, const RelaxationParams& params)
{
  if (!(t_kelvin > 0.0) || !std::isfinite(t_kelvin))
    throw DomainError("nu_bloch_gruneisen: temperature must be positive");
  const double ratio = t_kelvin / params.theta;
  const double upper = params.theta / t_kelvin;
  const auto integral = numerics::integrate(bg_integrand, 0.0, upper, 1e-9);
  const double r2 = ratio * ratio;
  return params.k_conv * params.c_bg * r2 * r2 * ratio * integral.value + params.residual_nu;
}

DispersionModel DispersionModel::ideal(TeZeroMode mode) { return DispersionModel(IdealMetal{mode}); }

DispersionModel DispersionModel::constant(double eps)
{
  if (!std::isfinite(eps) || !(eps > 1.0))
    throw DomainError("constant permittivity must be finite and > 1");
  return DispersionModel(ConstantEps{eps});
}

DispersionModel DispersionModel::drude(const DrudeParams& params)
{
  validate(params);
  return DispersionModel(Drude{params, std::nullopt});
}

DispersionModel DispersionModel::drude(const DrudeParams& params, const RelaxationParams& relaxation)
{
  validate(params);
  validate(relaxation);
  return DispersionModel(Drude{params, relaxation});
}

DispersionModel DispersionModel::plasma(const PlasmaParams& params)
{
  validate(params);
  return DispersionModel(Plasma{params});
}

DispersionModel DispersionModel::tabulated(std::shared_ptr<const optics::SpectralTable> table)
{
  if (!table || table->size() < 2)
    throw DomainError("tabulated model needs a table with at least two entries");
  return DispersionModel(Tabulated{std::move(table)});
}

bool DispersionModel::is_drude_like() const noexcept
{
  return std::holds_alternative<Drude>(kind_) || std::holds_alternative<Tabulated>(kind_);
}

double eval_model(const DispersionModel& model, double zeta, double t_kelvin)
{
  struct Visitor
  {
    double zeta;
    double t_kelvin;

    double operator()(const IdealMetal&) const { return ideal_eps; }
    double operator()(const ConstantEps& c) const
    {
      require_positive_zeta(zeta, "eval_model");
      return c.eps;
    }
    double operator()(const Drude& d) const
    {
      if (!d.relaxation)
        return eps_drude(zeta, d.params);
      DrudeParams p = d.params;
      p.nu = nu_bloch_gruneisen(t_kelvin, *d.relaxation);
      return eps_drude(zeta, p);
    }
    double operator()(const Plasma& p) const { return eps_plasma(zeta, p.params); }
    double operator()(const Tabulated& t) const
    {
      require_positive_zeta(zeta, "eval_model");
      return optics::interpolate(*t.table, zeta);
    }
  };
  return std::visit(Visitor{zeta, t_kelvin}, model.kind());
}

DispersionModel at_temperature(const DispersionModel& model, double t_kelvin)
{
  const auto* d = model.as<Drude>();
  if (!d || !d->relaxation)
    return model;
  DrudeParams p = d->params;
  p.nu = nu_bloch_gruneisen(t_kelvin, *d->relaxation);
  return DispersionModel::drude(p);
}

std::string describe(const DispersionModel& model)
{
  struct Visitor
  {
    std::string operator()(const IdealMetal& m) const
    {
      return m.te_zero_mode == TeZeroMode::Included ? "ideal" : "ideal-mim";
    }
    std::string operator()(const ConstantEps& c) const
    {
      std::ostringstream os;
      os << "const:" << c.eps;
      return os.str();
    }
    std::string operator()(const Drude& d) const
    {
      std::ostringstream os;
      os << "drude:" << d.params.omega_p << ":" << d.params.nu;
      if (d.relaxation)
        os << "+bg";
      return os.str();
    }
    std::string operator()(const Plasma& p) const
    {
      std::ostringstream os;
      os << "plasma:" << p.params.omega_p;
      return os.str();
    }
    std::string operator()(const Tabulated& t) const { return "table:" + t.table->source(); }
  };
  return std::visit(Visitor{}, model.kind());
}

}  // namespace casimir::dispersion
