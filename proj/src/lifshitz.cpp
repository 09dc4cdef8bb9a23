// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/reflection.hpp"
#include "casimir/units.hpp"

namespace casimir::lifshitz
{

namespace
{

using dispersion::DispersionModel;
using matsubara::Term;

constexpr unsigned quad_depth = 15;
// Quadrature tolerance target for the differenced free energies.
constexpr double entropy_rel_tol = 1e-12;
constexpr double t_floor_kelvin = 1e-6;

double quad_tol(const QuadratureConfig& cfg) { return std::clamp(0.01 * cfg.rel_tol, 1e-13, 1e-10); }

// y^2 A e^{-2y} / (1 - A e^{-2y}) = y^2 A / (expm1(2y) + 1 - A).
double pressure_kernel(double coeff, double y)
{
  if (coeff == 0.0)
    return 0.0;
  return y * y * coeff / (std::expm1(2.0 * y) + (1.0 - coeff));
}

// y ln(1 - A e^{-2y}); near A e^{-2y} = 1 the argument is rebuilt from expm1.
double free_energy_kernel(double coeff, double y)
{
  if (coeff == 0.0)
    return 0.0;
  const double e = std::exp(-2.0 * y);
  const double x = coeff * e;
  if (x < 0.5)
    return y * std::log1p(-x);
  return y * std::log(-std::expm1(-2.0 * y) + (1.0 - coeff) * e);
}

// Largest possible squared coefficient, for the y > y_max envelope.
double coefficient_ceiling(const DispersionModel& model)
{
  if (const auto* c = model.as<dispersion::ConstantEps>())
  {
    const double r = (c->eps - 1.0) / (c->eps + 1.0);
    return r * r;
  }
  return 1.0;
}

std::size_t first_vanishing_mode(double gamma, double y_max)
{
  const double ratio = y_max / gamma;
  if (ratio >= 1e15)
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::floor(ratio)) + 1;
}

struct Context
{
  DispersionModel model;  // temperature already resolved
  const PlateGeometry& geom;
  double gamma;
  double a_nat;
  double y_max;
  double tol;

  // eps(i zeta_m) for m >= 1.
  double eps(std::size_t m) const
  {
    return dispersion::eval_model(model, geom.matsubara_ev(m), geom.t_kelvin());
  }

  bool zero_mode_te_vanishes() const
  {
    return reflection::zero_mode(model, 1.0, geom.a_um()).b_coeff == 0.0 &&
           model.as<dispersion::Plasma>() == nullptr;
  }

  template <class Kernel>
  Term term(std::size_t m, Kernel kernel) const
  {
    if (m == 0)
    {
      auto tm = [&](double y) { return kernel(reflection::zero_mode(model, y, geom.a_um()).a_coeff, y); };
      auto te = [&](double y) { return kernel(reflection::zero_mode(model, y, geom.a_um()).b_coeff, y); };
      Term t;
      t.tm = 0.5 * numerics::integrate(tm, 0.0, y_max, tol, quad_depth).value;
      t.te = zero_mode_te_vanishes() ? 0.0 : 0.5 * numerics::integrate(te, 0.0, y_max, tol, quad_depth).value;
      return t;
    }
    const double lo = static_cast<double>(m) * gamma;
    if (lo >= y_max)
      return {};
    const double e = eps(m);
    auto tm = [&](double y) { return kernel(reflection::coefficients(e, std::max(1.0, y / lo)).a_coeff, y); };
    auto te = [&](double y) { return kernel(reflection::coefficients(e, std::max(1.0, y / lo)).b_coeff, y); };
    return {numerics::integrate(tm, lo, y_max, tol, quad_depth).value,
            numerics::integrate(te, lo, y_max, tol, quad_depth).value};
  }
};

Context make_context(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  cfg.validate();
  return Context{dispersion::at_temperature(model, geom.t_kelvin()), geom, geom.gamma(), geom.a_natural(),
                 cfg.y_max, quad_tol(cfg)};
}

matsubara::SumControl control_for(const QuadratureConfig& cfg, double gamma, bool keep_terms)
{
  matsubara::SumControl c;
  c.rel_tol = cfg.rel_tol;
  c.m_max = cfg.m_max;
  c.m_zero = first_vanishing_mode(gamma, cfg.y_max);
  c.keep_terms = keep_terms;
  c.threads = cfg.threads;
  return c;
}

matsubara::Sum run(const matsubara::TermFn& fn, const matsubara::SumControl& control, const QuadratureConfig& cfg)
{
  return cfg.parallel ? matsubara::sum_terms(fn, control) : matsubara::reference::sum_terms(fn, control);
}

// Envelope of the y > y_max part over every term: terms with m gamma <= y_max
// share the moment at y_max, later ones are bounded by the integral of the
// decreasing moment.
double tail_envelope(const Context& ctx, bool pressure_form)
{
  const double y = ctx.y_max;
  const double e = std::exp(-2.0 * y);
  const double full = std::floor(y / ctx.gamma);
  const double edge = full * ctx.gamma;
  const double ee = std::exp(-2.0 * edge);
  double moment = 0.0;
  double beyond = 0.0;
  if (pressure_form)
  {
    moment = e * (0.5 * y * y + 0.5 * y + 0.25);
    beyond = ee * (0.25 * edge * edge + 0.5 * edge + 0.375);
  }
  else
  {
    moment = e * (0.5 * y + 0.25);
    beyond = ee * (0.25 * edge + 0.25);
  }
  const double per_term = 2.0 * coefficient_ceiling(ctx.model) / (1.0 - e);
  return per_term * ((full + 0.5) * moment + beyond / ctx.gamma);
}

matsubara::Sum pressure_sum(const Context& ctx, const QuadratureConfig& cfg, bool keep_terms)
{
  const matsubara::TermFn fn = [&ctx](std::size_t m) { return ctx.term(m, pressure_kernel); };
  return run(fn, control_for(cfg, ctx.gamma, keep_terms), cfg);
}

// full_sum keeps every term below the y_max cut, so the result is smooth in T.
matsubara::Sum free_energy_sum(const Context& ctx, const QuadratureConfig& cfg, bool full_sum)
{
  const matsubara::TermFn fn = [&ctx](std::size_t m) { return ctx.term(m, free_energy_kernel); };
  auto control = control_for(cfg, ctx.gamma, false);
  if (full_sum)
    control.rel_tol = 0.0;
  return run(fn, control, cfg);
}

void note_truncation(ThermoResult& r, const matsubara::Sum& s, const QuadratureConfig& cfg)
{
  if (!s.converged)
  {
    r.converged = false;
    r.note = "Matsubara sum not converged within m_max = " + std::to_string(cfg.m_max);
  }
}

struct ScaledFreeEnergy
{
  double value;
  std::size_t terms;
  bool converged;
  double tail;
};

ScaledFreeEnergy scaled_free_energy(const DispersionModel& model, const PlateGeometry& geom,
                                    const QuadratureConfig& cfg, bool full_sum = false)
{
  const auto ctx = make_context(model, geom, cfg);
  const auto s = free_energy_sum(ctx, cfg, full_sum);
  const double pref = ctx.gamma / (4.0 * units::pi * units::pi);
  return {pref * s.total(), s.terms_used, s.converged, pref * tail_envelope(ctx, false)};
}

}  // namespace

PlateGeometry::PlateGeometry(double a_um, double t_kelvin) : a_um_(a_um), t_kelvin_(t_kelvin)
{
  if (!(a_um > 0.0) || !std::isfinite(a_um))
    throw DomainError("plate separation must be positive and finite");
  if (!(t_kelvin > 0.0) || !std::isfinite(t_kelvin))
    throw DomainError("temperature must be positive and finite");
}

double PlateGeometry::a_natural() const noexcept { return units::gap_natural(a_um_); }

double PlateGeometry::reduced_t() const noexcept { return units::reduced_temperature(a_um_, t_kelvin_); }

double PlateGeometry::gamma() const noexcept { return 2.0 * units::pi * reduced_t(); }

double PlateGeometry::beta() const noexcept { return 1.0 / units::kelvin_to_ev(t_kelvin_); }

double PlateGeometry::matsubara_ev(std::size_t m) const noexcept
{
  return 2.0 * units::pi * static_cast<double>(m) * units::kelvin_to_ev(t_kelvin_);
}

void QuadratureConfig::validate() const
{
  if (!(y_max >= 10.0))
    throw DomainError("QuadratureConfig: y_max must be >= 10");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
    throw DomainError("QuadratureConfig: rel_tol must lie in (0, 1e-4]");
  if (m_max < 1)
    throw DomainError("QuadratureConfig: m_max must be >= 1");
}

ThermoResult pressure(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  const auto ctx = make_context(model, geom, cfg);
  const auto s = pressure_sum(ctx, cfg, false);
  const double pref = -ctx.gamma / (2.0 * units::pi * units::pi);
  ThermoResult r;
  r.scaled.pressure = pref * s.total();
  r.pressure = units::pressure_to_mpa(r.scaled.pressure, geom.a_um());
  r.terms_used = s.terms_used;
  r.tail_bound = -pref * tail_envelope(ctx, true);
  note_truncation(r, s, cfg);
  return r;
}

ThermoResult free_energy(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  const auto f = scaled_free_energy(model, geom, cfg);
  ThermoResult r;
  r.scaled.free_energy = f.value;
  r.free_energy = units::energy_to_si(f.value, geom.a_um());
  r.terms_used = f.terms;
  r.tail_bound = f.tail;
  if (!f.converged)
  {
    r.converged = false;
    r.note = "Matsubara sum not converged within m_max = " + std::to_string(cfg.m_max);
  }
  return r;
}

ThermoResult entropy_internal(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  QuadratureConfig fine = cfg;
  fine.rel_tol = std::min(cfg.rel_tol, entropy_rel_tol);

  const double t = geom.t_kelvin();
  // Below 2 floors the step is clamped so the stencil stays at T > 0, and the
  // result is flagged.
  const bool underflow = t_floor_kelvin >= 0.5 * t;
  const double h = underflow ? 0.5 * t : std::max(1e-3 * t, t_floor_kelvin);

  ThermoResult r;
  bool converged = true;
  std::size_t terms = 0;
  auto f_of_t = [&](double tk) {
    const auto f = scaled_free_energy(model, PlateGeometry(geom.a_um(), tk), fine, true);
    converged = converged && f.converged;
    terms = std::max(terms, f.terms);
    return f.value;
  };

  const auto centre = scaled_free_energy(model, geom, fine, true);
  const double df_dt = numerics::richardson_derivative(f_of_t, t, h);
  // S a^2 = -d(F a^3)/d(a T).
  const double dt_reduced = geom.a_natural() * units::k_boltzmann_ev;
  r.scaled.free_energy = centre.value;
  r.scaled.entropy = -df_dt / dt_reduced;
  r.scaled.internal_energy = centre.value + geom.reduced_t() * r.scaled.entropy;
  r.free_energy = units::energy_to_si(r.scaled.free_energy, geom.a_um());
  r.entropy = units::entropy_to_si(r.scaled.entropy, geom.a_um());
  r.internal_energy = units::energy_to_si(r.scaled.internal_energy, geom.a_um());
  r.terms_used = std::max(terms, centre.terms);
  r.tail_bound = centre.tail;
  r.converged = converged && centre.converged;
  if (!r.converged)
    r.note = "Matsubara sum not converged within m_max = " + std::to_string(cfg.m_max);
  if (underflow)
  {
    r.converged = false;
    r.note = "temperature step underflow: T below differencing floor";
  }
  return r;
}

ThermoResult thermo(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  auto r = entropy_internal(model, geom, cfg);
  const auto p = pressure(model, geom, cfg);
  r.scaled.pressure = p.scaled.pressure;
  r.pressure = p.pressure;
  r.terms_used = std::max(r.terms_used, p.terms_used);
  if (!p.converged)
  {
    r.converged = false;
    if (r.note.empty())
      r.note = p.note;
  }
  return r;
}

double internal_energy_from_beta(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  QuadratureConfig fine = cfg;
  fine.rel_tol = std::min(cfg.rel_tol, entropy_rel_tol);
  // beta in 1/K; d(beta f)/d beta does not depend on the unit of beta.
  auto g = [&](double beta) {
    return beta * scaled_free_energy(model, PlateGeometry(geom.a_um(), 1.0 / beta), fine, true).value;
  };
  const double beta = 1.0 / geom.t_kelvin();
  return numerics::richardson_derivative(g, beta, 1e-3 * beta);
}

Term pressure_integrand(const DispersionModel& model, const PlateGeometry& geom, std::size_t m, double y)
{
  const auto resolved = dispersion::at_temperature(model, geom.t_kelvin());
  if (m == 0)
  {
    const auto c = reflection::zero_mode(resolved, y, geom.a_um());
    return {pressure_kernel(c.a_coeff, y), pressure_kernel(c.b_coeff, y)};
  }
  const double lo = static_cast<double>(m) * geom.gamma();
  if (y < lo)
    return {};
  const double e = dispersion::eval_model(resolved, geom.matsubara_ev(m), geom.t_kelvin());
  const auto c = reflection::coefficients(e, std::max(1.0, y / lo));
  return {pressure_kernel(c.a_coeff, y), pressure_kernel(c.b_coeff, y)};
}

PressureSplit pressure_split(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  const auto ctx = make_context(model, geom, cfg);
  const auto s = pressure_sum(ctx, cfg, false);
  const double pref = -ctx.gamma / (2.0 * units::pi * units::pi);
  return {pref * s.tm, pref * s.te, s.terms_used, s.converged};
}

ModeBreakdown mode_breakdown(const DispersionModel& model, const PlateGeometry& geom, const QuadratureConfig& cfg)
{
  const auto ctx = make_context(model, geom, cfg);
  const auto s = pressure_sum(ctx, cfg, true);
  const double pref = -ctx.gamma / (2.0 * units::pi * units::pi);
  ModeBreakdown b;
  b.pressure_mpa = units::pressure_to_mpa(pref * s.total(), geom.a_um());
  b.terms_used = s.terms_used;
  b.converged = s.converged;
  const double total = s.total();
  b.modes.reserve(s.terms.size());
  for (std::size_t m = 0; m < s.terms.size(); ++m)
  {
    const auto& t = s.terms[m];
    b.modes.push_back({m, 100.0 * t.total() / total, 100.0 * t.tm / total, 100.0 * t.te / total});
  }
  return b;
}

std::vector<CoefficientSample> coefficient_samples(const DispersionModel& model, const PlateGeometry& geom,
                                                   std::span<const std::size_t> ms, std::span<const double> ys)
{
  const auto resolved = dispersion::at_temperature(model, geom.t_kelvin());
  std::vector<CoefficientSample> out;
  for (std::size_t m : ms)
  {
    for (double y : ys)
    {
      if (m == 0)
      {
        const auto c = reflection::zero_mode(resolved, y, geom.a_um());
        out.push_back({m, y, std::numeric_limits<double>::quiet_NaN(), 0.0, c.a_coeff, c.b_coeff});
        continue;
      }
      const double lo = static_cast<double>(m) * geom.gamma();
      if (y < lo)
        continue;
      const double zeta = geom.matsubara_ev(m);
      const double e = dispersion::eval_model(resolved, zeta, geom.t_kelvin());
      const auto c = reflection::coefficients(e, y / lo);
      out.push_back({m, y, e, units::ev_to_rad_per_s(zeta), c.a_coeff, c.b_coeff});
    }
  }
  return out;
}

}  // namespace casimir::lifshitz
