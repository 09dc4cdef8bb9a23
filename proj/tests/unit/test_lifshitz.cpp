// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <memory>
#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/errors.hpp"
#include "casimir/ideal_metal.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/optical_data.hpp"
#include "casimir/units.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::lifshitz;
using dispersion::DispersionModel;

namespace
{

const double pi = units::pi;

DispersionModel gold() { return DispersionModel::drude(dispersion::gold_drude()); }

// Symmetric five-point derivative, independent of the library helper.
template <class F>
double derivative(F f, double x, double h)
{
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("geometry and unit anchors")
{
  const PlateGeometry g(1.0, 300.0);
  CHECK(g.gamma() == doctest::Approx(0.823).epsilon(1e-3));
  CHECK(1.0 / units::kelvin_to_ev(300.0) == doctest::Approx(38.7).epsilon(2e-3));
  CHECK(units::ev_to_rad_per_s(1.0) == doctest::Approx(1.519e15).epsilon(1e-3));
  CHECK(g.matsubara_ev(3) == doctest::Approx(3.0 * 2.0 * pi * units::kelvin_to_ev(300.0)).epsilon(1e-15));
  CHECK(g.matsubara_ev(2) * g.a_natural() == doctest::Approx(2.0 * g.gamma()).epsilon(1e-14));
  CHECK(g.beta() == doctest::Approx(1.0 / units::kelvin_to_ev(300.0)).epsilon(1e-15));
  CHECK_THROWS_AS(PlateGeometry(0.0, 300.0), DomainError);
  CHECK_THROWS_AS(PlateGeometry(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PlateGeometry(1.0, -5.0), DomainError);
}

TEST_CASE("quadrature config validation")
{
  QuadratureConfig c;
  CHECK_NOTHROW(c.validate());
  c.y_max = 9.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.rel_tol = 1e-3;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.rel_tol = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.m_max = 0;
  CHECK_THROWS_AS(pressure(gold(), {1.0, 300.0}, c), DomainError);
}

TEST_CASE("pressure anchors")
{
  const auto cold = pressure(DispersionModel::ideal(), {1.0, 1.0});
  CHECK(cold.converged);
  CHECK(*cold.pressure == doctest::Approx(-1.30).epsilon(0.01));
  const auto ideal = pressure(DispersionModel::ideal(), {0.5, 300.0});
  CHECK(*ideal.pressure == doctest::Approx(-20.8).epsilon(0.01));
  const auto drude = pressure(gold(), {0.5, 300.0});
  CHECK(*drude.pressure == doctest::Approx(-15.5).epsilon(0.05));
}

TEST_CASE("engine reproduces the ideal-metal series")
{
  QuadratureConfig c;
  c.rel_tol = 1e-11;
  for (double g : {0.05, 0.1, 0.3, 1.0, 2.0, 5.0})
  {
    const double a = 1.0;
    const PlateGeometry geom(a, units::kelvin_from_reduced(g / (2.0 * pi), a));
    const auto e = pressure(DispersionModel::ideal(), geom, c);
    const auto s = ideal::exact_thermo({geom.gamma()});
    CHECK(e.scaled.pressure == doctest::Approx(s.pressure).epsilon(1e-8));
    const auto f = free_energy(DispersionModel::ideal(), geom, c);
    CHECK(f.scaled.free_energy == doctest::Approx(s.free_energy).epsilon(1e-8));
  }
}

TEST_CASE("free energy is minus the derivative of pressure in a")
{
  QuadratureConfig c;
  c.rel_tol = 1e-12;
  const auto model = DispersionModel::constant(1000.0);
  const double p_pa = *pressure(model, {1.0, 300.0}, c).pressure * 1e-3;
  auto f = [&](double a_um) { return *free_energy(model, {a_um, 300.0}, c).free_energy; };
  const double dfda = derivative(f, 1.0, 1e-3) * 1e6;
  CHECK(-dfda == doctest::Approx(p_pa).epsilon(1e-4));
}

TEST_CASE("free energy limits")
{
  const auto cold = free_energy(DispersionModel::ideal(), {1.0, 1.0});
  CHECK(cold.scaled.free_energy == doctest::Approx(-pi * pi / 720.0).epsilon(1e-6));
  const auto weak = free_energy(DispersionModel::constant(1.0 + 1e-6), {1.0, 300.0});
  const auto ref = free_energy(DispersionModel::ideal(), {1.0, 300.0});
  CHECK(weak.scaled.free_energy < 0.0);
  CHECK(std::abs(weak.scaled.free_energy) < 1e-9 * std::abs(ref.scaled.free_energy));
}

TEST_CASE("entropy matches the ideal-metal analytic series")
{
  const double a = 1.0;
  const PlateGeometry geom(a, units::kelvin_from_reduced(1.0 / (2.0 * pi), a));
  const auto r = entropy_internal(DispersionModel::ideal(), geom);
  const auto s = ideal::exact_thermo({geom.gamma()});
  CHECK(r.converged);
  CHECK(r.scaled.entropy == doctest::Approx(s.entropy).epsilon(1e-4));
  CHECK(r.scaled.internal_energy == doctest::Approx(s.internal_energy).epsilon(1e-4));
  CHECK(*r.entropy == doctest::Approx(units::entropy_to_si(s.entropy, a)).epsilon(1e-4));
}

TEST_CASE("U from beta differencing agrees with F + T S")
{
  for (const auto& model : {DispersionModel::ideal(), DispersionModel::constant(1000.0), gold()})
  {
    const PlateGeometry geom(1.0, 300.0);
    const auto r = entropy_internal(model, geom);
    const double u_beta = internal_energy_from_beta(model, geom);
    CHECK(r.scaled.internal_energy == doctest::Approx(u_beta).epsilon(1e-6));
    CHECK(r.scaled.free_energy == doctest::Approx(r.scaled.internal_energy - geom.reduced_t() * r.scaled.entropy)
                                    .epsilon(1e-12));
  }
}

TEST_CASE("dielectric entropy is negative at low T and vanishes as T -> 0")
{
  const auto model = DispersionModel::constant(1000.0);
  const double a = 1.0;
  auto s_at = [&](double at) {
    return entropy_internal(model, {a, units::kelvin_from_reduced(at, a)}).scaled.entropy;
  };
  bool negative = false;
  for (double at : {0.02, 0.05, 0.1, 0.15, 0.2, 0.25})
    negative = negative || s_at(at) < 0.0;
  CHECK(negative);
  const double s1 = std::abs(s_at(1e-3));
  const double s2 = std::abs(s_at(4e-3));
  CHECK(s1 < s2);
  CHECK(s1 < 0.01 * std::abs(s_at(0.1)));
}

TEST_CASE("entropy step underflow is flagged")
{
  QuadratureConfig c;
  c.m_max = 5;
  const auto r = entropy_internal(gold(), {1.0, 1e-6}, c);
  CHECK_FALSE(r.converged);
  CHECK(r.note.find("underflow") != std::string::npos);
  const auto p = pressure(gold(), {1.0, 1e-6}, c);
  CHECK_FALSE(p.converged);
  CHECK_FALSE(p.note.empty());
}

TEST_CASE("thermo fills all four quantities")
{
  const auto r = thermo(gold(), {1.0, 300.0});
  CHECK(r.pressure.has_value());
  CHECK(r.free_energy.has_value());
  CHECK(r.internal_energy.has_value());
  CHECK(r.entropy.has_value());
  CHECK(*r.pressure == doctest::Approx(*pressure(gold(), {1.0, 300.0}).pressure).epsilon(1e-15));
  const auto only_p = pressure(gold(), {1.0, 300.0});
  CHECK_FALSE(only_p.free_energy.has_value());
  CHECK_FALSE(only_p.entropy.has_value());
}

TEST_CASE("pressure and free energy are negative and weaken with distance")
{
  auto table = std::make_shared<optics::SpectralTable>(optics::build_spectral_table(
    optics::synthesize_drude_table(dispersion::gold_drude(), optics::log_grid(1e-5, 1e4, 361)),
    optics::default_zeta_grid()));
  const DispersionModel models[] = {
    DispersionModel::ideal(),
    DispersionModel::ideal(dispersion::TeZeroMode::Excluded),
    DispersionModel::constant(3.0),
    DispersionModel::constant(1e4),
    gold(),
    DispersionModel::drude(dispersion::gold_drude(), dispersion::gold_relaxation()),
    DispersionModel::plasma({9.0}),
    DispersionModel::tabulated(table),
  };
  for (const auto& m : models)
  {
    for (double t : {10.0, 300.0})
    {
      double prev_p = -1e300;
      double prev_f = -1e300;
      for (double a : {0.3, 0.6, 1.2, 2.5, 5.0})
      {
        const double p = *pressure(m, {a, t}).pressure;
        const double f = *free_energy(m, {a, t}).free_energy;
        CHECK(p < 0.0);
        CHECK(f < 0.0);
        CHECK(p > prev_p);
        CHECK(f > prev_f);
        prev_p = p;
        prev_f = f;
      }
    }
  }
}

TEST_CASE("Drude zero mode and the high-temperature slope")
{
  for (double y : {1e-6, 0.5, 3.0, 29.0})
    CHECK(pressure_integrand(gold(), {1.0, 300.0}, 0, y).te == 0.0);
  CHECK(pressure_integrand(gold(), {1.0, 300.0}, 0, 0.5).tm > 0.0);
  CHECK(pressure_integrand(gold(), {1.0, 300.0}, 2, 0.1).tm == 0.0);

  // -dF/dT at large a T: the ideal metal has twice the Drude slope.
  const double a = 5.0;
  auto f = [&](const DispersionModel& m, double at) {
    return free_energy(m, {a, units::kelvin_from_reduced(at, a)}).scaled.free_energy;
  };
  const auto ideal = DispersionModel::ideal();
  const auto mim = DispersionModel::ideal(dispersion::TeZeroMode::Excluded);
  const double si = derivative([&](double x) { return f(ideal, x); }, 2.0, 0.01);
  const double sd = derivative([&](double x) { return f(gold(), x); }, 2.0, 0.01);
  const double sm = derivative([&](double x) { return f(mim, x); }, 2.0, 0.01);
  CHECK(si / sd == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(si / sm == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(si == doctest::Approx(-units::zeta3 / (8.0 * pi)).epsilon(1e-3));
}

TEST_CASE("reported tail bound covers the discarded large-y part")
{
  QuadratureConfig c30;
  c30.rel_tol = 1e-12;
  QuadratureConfig c10 = c30;
  c10.y_max = 10.0;
  for (const auto& m : {DispersionModel::ideal(), DispersionModel::constant(50.0), gold()})
  {
    const PlateGeometry geom(1.0, 300.0);
    const auto short_p = pressure(m, geom, c10);
    const auto long_p = pressure(m, geom, c30);
    const double discarded = std::abs(long_p.scaled.pressure - short_p.scaled.pressure);
    CHECK(discarded <= short_p.tail_bound);
    CHECK(long_p.tail_bound < 1e-15 * std::abs(long_p.scaled.pressure));
    const auto short_f = free_energy(m, geom, c10);
    const auto long_f = free_energy(m, geom, c30);
    CHECK(std::abs(long_f.scaled.free_energy - short_f.scaled.free_energy) <= short_f.tail_bound);
  }
}

TEST_CASE("terms needed decrease with temperature")
{
  std::size_t prev = static_cast<std::size_t>(-1);
  for (double t : {10.0, 30.0, 100.0, 300.0, 600.0, 1200.0})
  {
    const auto r = pressure(gold(), {1.0, t});
    CHECK(r.converged);
    CHECK(r.terms_used <= prev);
    prev = r.terms_used;
  }
}

TEST_CASE("parallel and serial engines agree bit for bit")
{
  QuadratureConfig par;
  par.threads = 4;
  QuadratureConfig ser = par;
  ser.parallel = false;
  for (const auto& m : {DispersionModel::ideal(), DispersionModel::constant(100.0), gold()})
  {
    const PlateGeometry geom(0.8, 77.0);
    const double a = pressure(m, geom, par).scaled.pressure;
    const double b = pressure(m, geom, ser).scaled.pressure;
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
    const double fa = free_energy(m, geom, par).scaled.free_energy;
    const double fb = free_energy(m, geom, ser).scaled.free_energy;
    CHECK(std::memcmp(&fa, &fb, sizeof fa) == 0);
  }
}

TEST_CASE("mode breakdown")
{
  const auto far = mode_breakdown(gold(), {5.0, 300.0});
  CHECK(far.modes.at(0).fraction == doctest::Approx(96.58).epsilon(0.0105));
  const auto near = mode_breakdown(gold(), {1.0, 300.0});
  CHECK(std::abs(near.modes.at(0).fraction - 20.07) <= 1.5);
  CHECK(std::abs(near.modes.at(1).fraction - 49.37) <= 1.5);
  CHECK(near.pressure_mpa == doctest::Approx(*pressure(gold(), {1.0, 300.0}).pressure).epsilon(1e-14));
  for (const auto& b : {far, near, mode_breakdown(DispersionModel::constant(10.0), {2.0, 50.0})})
  {
    double sum = 0.0;
    for (const auto& m : b.modes)
    {
      sum += m.fraction;
      CHECK(m.tm_share + m.te_share == doctest::Approx(m.fraction).epsilon(1e-12));
    }
    CHECK(sum == doctest::Approx(100.0).epsilon(1e-8));
  }
  CHECK(near.modes.at(0).te_share == 0.0);
}

TEST_CASE("coefficient samples")
{
  const PlateGeometry geom(1.0, 300.0);
  const std::size_t ms[] = {0, 1, 3};
  const double ys[] = {1.0, 3.0};
  const auto s = coefficient_samples(gold(), geom, ms, ys);
  // m = 3 at y = 1 lies below the cut y = m gamma and is skipped.
  REQUIRE(s.size() == 5);
  CHECK(s[0].a_coeff == 1.0);
  CHECK(s[0].b_coeff == 0.0);
  CHECK(std::isnan(s[0].eps));
  CHECK(s[2].m == 1);
  CHECK(s[2].eps == doctest::Approx(dispersion::eps_drude(geom.matsubara_ev(1), dispersion::gold_drude())).epsilon(1e-15));
  CHECK(s[2].zeta_rad_s == doctest::Approx(2.47e14).epsilon(1e-2));
  CHECK(s[4].m == 3);
  CHECK(s[4].y == 3.0);
  for (const auto& c : s)
    CHECK(c.b_coeff <= c.a_coeff);
}

TEST_CASE("tabulated Drude table tracks the closed-form model")
{
  auto table = std::make_shared<optics::SpectralTable>(optics::build_spectral_table(
    optics::synthesize_drude_table(dispersion::gold_drude(), optics::log_grid(1e-5, 1e4, 361)),
    optics::default_zeta_grid()));
  for (double a : {0.5, 2.0})
  {
    const double pt = *pressure(DispersionModel::tabulated(table), {a, 300.0}).pressure;
    const double pd = *pressure(gold(), {a, 300.0}).pressure;
    CHECK(pt == doctest::Approx(pd).epsilon(1e-3));
  }
}
