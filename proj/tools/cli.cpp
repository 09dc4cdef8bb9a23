// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "casimir/errors.hpp"
#include "casimir/ideal_metal.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/optical_data.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/units.hpp"

namespace casimir::cli
{

namespace
{

using dispersion::DispersionModel;

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char ch : s)
  {
    if (ch == '"')
      q += '"';
    q += ch;
  }
  return q + "\"";
}

double parse_number(const std::string& s, const std::string& what)
{
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw CLI::ValidationError(what, "cannot parse '" + s + "' as a number");
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& what)
{
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_number(item, what));
  if (out.empty())
    throw CLI::ValidationError(what, "empty list");
  return out;
}

// lo:hi:n, evenly spaced, inclusive.
std::vector<double> parse_range(const std::string& s, const std::string& what)
{
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':'))
    parts.push_back(item);
  if (parts.size() != 3)
    throw CLI::ValidationError(what, "expected lo:hi:n, got '" + s + "'");
  const double lo = parse_number(parts[0], what);
  const double hi = parse_number(parts[1], what);
  const double nd = parse_number(parts[2], what);
  if (!(nd >= 1.0) || nd != std::floor(nd))
    throw CLI::ValidationError(what, "point count must be a positive integer");
  const auto n = static_cast<std::size_t>(nd);
  if (n == 1)
  {
    if (lo != hi)
      throw CLI::ValidationError(what, "a one-point range needs lo == hi");
    return {lo};
  }
  if (!(hi > lo))
    throw CLI::ValidationError(what, "range must be increasing");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

enum class Quantity
{
  Force,
  FreeEnergy,
  Thermo,
};

enum class Method
{
  Auto,
  Engine,
  Analytic,
};

struct Row
{
  double a_um;
  double t_kelvin;
  std::optional<double> pressure;
  std::optional<double> free_energy;
  std::optional<double> internal_energy;
  std::optional<double> entropy;
  std::size_t terms_used = 0;
  bool converged = true;
};

const char* row_header = "a_um,T_K,model,pressure_mPa,F_J_m2,U_J_m2,S_J_K_m2,terms_used,converged";

std::string format_row(const Row& r, const std::string& model)
{
  return num(r.a_um) + "," + num(r.t_kelvin) + "," + csv_field(model) + "," + num(r.pressure) + "," +
         num(r.free_energy) + "," + num(r.internal_energy) + "," + num(r.entropy) + "," +
         std::to_string(r.terms_used) + "," + (r.converged ? "1" : "0");
}

bool use_analytic(const DispersionModel& model, Method method)
{
  const bool ideal = model.as<dispersion::IdealMetal>() != nullptr;
  if (method == Method::Analytic && !ideal)
    throw DomainError("--method analytic is available only for ideal and ideal-mim");
  return ideal && method != Method::Engine;
}

Row analytic_row(const DispersionModel& model, double a_um, double t_kelvin, Quantity q)
{
  const lifshitz::PlateGeometry geom(a_um, t_kelvin);
  auto th = ideal::ideal_thermo({geom.gamma()});
  if (model.as<dispersion::IdealMetal>()->te_zero_mode == dispersion::TeZeroMode::Excluded)
  {
    // Removing the TE zero mode: P + zeta(3) t / (8 pi), F + zeta(3) t / (16 pi).
    const double t = geom.reduced_t();
    th.pressure += units::zeta3 * t / (8.0 * units::pi);
    th.free_energy += units::zeta3 * t / (16.0 * units::pi);
    th.entropy -= units::zeta3 / (16.0 * units::pi);
  }
  Row r{a_um, t_kelvin, {}, {}, {}, {}, th.terms_used, th.converged};
  if (q != Quantity::FreeEnergy)
    r.pressure = units::pressure_to_mpa(th.pressure, a_um);
  if (q != Quantity::Force)
    r.free_energy = units::energy_to_si(th.free_energy, a_um);
  if (q == Quantity::Thermo)
  {
    r.internal_energy = units::energy_to_si(th.internal_energy, a_um);
    r.entropy = units::entropy_to_si(th.entropy, a_um);
  }
  return r;
}

Row compute_row(const DispersionModel& model, double a_um, double t_kelvin, Quantity q,
                const lifshitz::QuadratureConfig& cfg, Method method)
{
  if (use_analytic(model, method))
    return analytic_row(model, a_um, t_kelvin, q);
  const lifshitz::PlateGeometry geom(a_um, t_kelvin);
  lifshitz::ThermoResult res;
  switch (q)
  {
  case Quantity::Force:
    res = lifshitz::pressure(model, geom, cfg);
    break;
  case Quantity::FreeEnergy:
    res = lifshitz::free_energy(model, geom, cfg);
    break;
  case Quantity::Thermo:
    res = lifshitz::thermo(model, geom, cfg);
    break;
  }
  return {a_um, t_kelvin, res.pressure, res.free_energy, res.internal_energy, res.entropy, res.terms_used,
          res.converged};
}

struct Options
{
  std::string model = "drude-gold";
  std::vector<double> a;
  std::vector<double> t;
  std::vector<double> a_t;
  std::string a_spec;
  std::string t_spec;
  std::string a_range;
  std::string t_range;
  std::string at_range;
  std::string quantity = "force";
  std::string method = "auto";
  std::string out_path;
  double y_max = 30.0;
  double rel_tol = 1e-9;
  std::size_t m_max = 100000;
  int threads = 0;
  std::size_t max_m = static_cast<std::size_t>(-1);
  bool coefficients = false;
  std::string sample_m = "1,3,5,7,9,11,13,15";
  std::string sample_y = "1,3";
  std::string kind = "both";
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 2.0;
  double c = 0.5;
  std::string preset = "gold";
};

Method parse_method(const std::string& s)
{
  if (s == "auto")
    return Method::Auto;
  if (s == "engine")
    return Method::Engine;
  return Method::Analytic;
}

Quantity parse_quantity(const std::string& s)
{
  if (s == "force")
    return Quantity::Force;
  if (s == "free-energy")
    return Quantity::FreeEnergy;
  return Quantity::Thermo;
}

lifshitz::QuadratureConfig make_config(const Options& o)
{
  lifshitz::QuadratureConfig cfg;
  cfg.y_max = o.y_max;
  cfg.rel_tol = o.rel_tol;
  cfg.m_max = o.m_max;
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

std::vector<double> values_or_range(const std::string& list, const std::string& range, const std::string& what)
{
  if (!list.empty() && !range.empty())
    throw CLI::ValidationError(what, "give either a list or a range, not both");
  if (!range.empty())
    return parse_range(range, what);
  if (!list.empty())
    return parse_list(list, what);
  return {};
}

void add_point_options(CLI::App* cmd, Options& o)
{
  cmd->add_option("--model", o.model, "dispersion model preset")->capture_default_str();
  cmd->add_option("--a", o.a_spec, "plate separation(s), um, comma separated")->required();
  cmd->add_option("--T", o.t_spec, "temperature(s), K, comma separated")->required();
}

void add_quadrature_options(CLI::App* cmd, Options& o)
{
  cmd->add_option("--y-max", o.y_max, "upper cutoff of the y = q a integral")->capture_default_str();
  cmd->add_option("--rel-tol", o.rel_tol, "relative tolerance")->capture_default_str();
  cmd->add_option("--m-max", o.m_max, "Matsubara term cap")->capture_default_str();
  cmd->add_option("--threads", o.threads, "OpenMP threads, 0 for the runtime default")->capture_default_str();
  cmd->add_option("--method", o.method, "auto, engine or analytic (ideal models only)")
    ->check(CLI::IsMember({"auto", "engine", "analytic"}))
    ->capture_default_str();
}

struct Emitter
{
  std::ostream& out;
  std::unique_ptr<std::ofstream> file;

  std::ostream& stream() { return file ? *file : out; }
};

Emitter open_output(const std::string& path, std::ostream& out)
{
  Emitter e{out, nullptr};
  if (!path.empty())
  {
    e.file = std::make_unique<std::ofstream>(path);
    if (!*e.file)
      throw std::runtime_error("cannot open output file " + path);
  }
  return e;
}

struct Point
{
  double a_um;
  double t_kelvin;
};

// Points are evaluated concurrently; rows come back in input order.
int emit_rows(const std::vector<Point>& points, const Options& o, Quantity q, std::ostream& os)
{
  const auto model = parse_model(o.model);
  const auto cfg = make_config(o);
  const auto method = parse_method(o.method);
  std::vector<Row> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const int threads = o.threads > 0 ? o.threads : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i)
  {
    const auto k = static_cast<std::size_t>(i);
    try
    {
      rows[k] = compute_row(model, points[k].a_um, points[k].t_kelvin, q, cfg, method);
    }
    catch (...)
    {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  os << row_header << "\n";
  bool flagged = false;
  for (const auto& r : rows)
  {
    os << format_row(r, o.model) << "\n";
    flagged = flagged || !r.converged;
  }
  return flagged ? exit_flagged : exit_ok;
}

std::vector<Point> grid(const std::vector<double>& as, const std::vector<double>& ts)
{
  std::vector<Point> pts;
  for (double a : as)
    for (double t : ts)
      pts.push_back({a, t});
  return pts;
}

int run_point(const Options& o, Quantity q, std::ostream& os)
{
  return emit_rows(grid(parse_list(o.a_spec, "--a"), parse_list(o.t_spec, "--T")), o, q, os);
}

int run_sweep(const Options& o, std::ostream& os)
{
  const auto as = values_or_range(o.a_spec, o.a_range, "--a");
  if (as.empty())
    throw CLI::ValidationError("--a", "sweep needs --a or --a-range");
  const auto ts = values_or_range(o.t_spec, o.t_range, "--T");
  std::vector<Point> pts;
  if (!o.at_range.empty())
  {
    if (!ts.empty())
      throw CLI::ValidationError("--aT-range", "cannot be combined with --T or --T-range");
    const auto ats = parse_range(o.at_range, "--aT-range");
    for (double a : as)
      for (double at : ats)
        pts.push_back({a, units::kelvin_from_reduced(at, a)});
  }
  else
  {
    if (ts.empty())
      throw CLI::ValidationError("--T", "sweep needs --T, --T-range or --aT-range");
    pts = grid(as, ts);
  }
  return emit_rows(pts, o, parse_quantity(o.quantity), os);
}

int run_modes(const Options& o, std::ostream& os)
{
  const auto model = parse_model(o.model);
  const auto cfg = make_config(o);
  const double a = parse_number(o.a_spec, "--a");
  const double t = parse_number(o.t_spec, "--T");
  const lifshitz::PlateGeometry geom(a, t);
  if (o.coefficients)
  {
    std::vector<std::size_t> ms;
    for (double m : parse_list(o.sample_m, "--sample-m"))
    {
      if (m < 0.0 || m != std::floor(m))
        throw CLI::ValidationError("--sample-m", "indices must be non-negative integers");
      ms.push_back(static_cast<std::size_t>(m));
    }
    const auto ys = parse_list(o.sample_y, "--sample-y");
    os << "m,y,eps,zeta_rad_s,A,B\n";
    for (const auto& s : lifshitz::coefficient_samples(model, geom, ms, ys))
      os << s.m << "," << num(s.y) << "," << (std::isnan(s.eps) ? std::string() : num(s.eps)) << ","
         << num(s.zeta_rad_s) << "," << num(s.a_coeff) << "," << num(s.b_coeff) << "\n";
    return exit_ok;
  }
  const auto b = lifshitz::mode_breakdown(model, geom, cfg);
  os << "m,fraction_pct,tm_pct,te_pct\n";
  for (const auto& m : b.modes)
  {
    if (m.m > o.max_m)
      break;
    os << m.m << "," << num(m.fraction) << "," << num(m.tm_share) << "," << num(m.te_share) << "\n";
  }
  return b.converged ? exit_ok : exit_flagged;
}

int run_toy(const Options& o, std::ostream& os)
{
  const auto ts = values_or_range(o.t_spec, o.t_range.empty() && o.t_spec.empty() ? "0.02:2:100" : o.t_range,
                                  "--T");
  std::vector<oscillator::CouplingKind> kinds;
  if (o.kind == "coordinate" || o.kind == "both")
    kinds.push_back(oscillator::CouplingKind::Coordinate);
  if (o.kind == "momentum" || o.kind == "both")
    kinds.push_back(oscillator::CouplingKind::Momentum);
  os << "kind,T,F,S,terms_used,converged\n";
  bool flagged = false;
  for (auto kind : kinds)
  {
    const oscillator::OscillatorSystem sys{o.a1, o.a2, o.a3, o.c, kind};
    sys.validate();
    for (double t : ts)
    {
      const auto r = oscillator::induced_entropy(sys, t);
      os << (kind == oscillator::CouplingKind::Coordinate ? "coordinate" : "momentum") << "," << num(t) << ","
         << num(r.free_energy) << "," << num(r.entropy) << "," << r.terms_used << "," << (r.converged ? 1 : 0)
         << "\n";
      flagged = flagged || !r.converged;
    }
  }
  return flagged ? exit_flagged : exit_ok;
}

int run_nu(const Options& o, std::ostream& os)
{
  if (o.preset != "gold")
    throw CLI::ValidationError("--preset", "unknown preset '" + o.preset + "'");
  const auto ts = values_or_range(o.t_spec, o.t_range, "--T");
  if (ts.empty())
    throw CLI::ValidationError("--T", "nu needs --T or --T-range");
  const auto params = dispersion::gold_relaxation();
  os << "T_K,nu_eV\n";
  for (double t : ts)
    os << num(t) << "," << num(dispersion::nu_bloch_gruneisen(t, params)) << "\n";
  return exit_ok;
}

}  // namespace

std::filesystem::path resolve_data_path(const std::string& path)
{
  std::filesystem::path p(path);
  if (std::filesystem::exists(p) || p.is_absolute())
    return p;
  if (const char* dir = std::getenv("CASIMIR_DATA_DIR"))
  {
    const auto candidate = std::filesystem::path(dir) / p;
    if (std::filesystem::exists(candidate))
      return candidate;
  }
  return p;
}

DispersionModel parse_model(const std::string& spec)
{
  auto after = [&](std::size_t n) { return spec.substr(n); };
  if (spec == "ideal")
    return DispersionModel::ideal(dispersion::TeZeroMode::Included);
  if (spec == "ideal-mim")
    return DispersionModel::ideal(dispersion::TeZeroMode::Excluded);
  if (spec == "drude-gold")
    return DispersionModel::drude(dispersion::gold_drude());
  if (spec == "drude-gold-bg")
    return DispersionModel::drude(dispersion::gold_drude(), dispersion::gold_relaxation());
  if (spec.rfind("const:", 0) == 0)
    return DispersionModel::constant(parse_number(after(6), "--model"));
  if (spec.rfind("plasma:", 0) == 0)
    return DispersionModel::plasma({parse_number(after(7), "--model")});
  if (spec.rfind("drude:", 0) == 0)
  {
    const auto rest = after(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--model", "drude:<omega_p>:<nu> expected");
    return DispersionModel::drude(
      {parse_number(rest.substr(0, colon), "--model"), parse_number(rest.substr(colon + 1), "--model")});
  }
  if (spec.rfind("table:", 0) == 0)
  {
    const auto path = resolve_data_path(after(6));
    const auto grid = optics::default_zeta_grid();
    auto table = std::make_shared<optics::SpectralTable>(optics::load_model_table(path, grid));
    return DispersionModel::tabulated(std::move(table));
  }
  throw CLI::ValidationError("--model", "unknown model '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Finite-temperature Casimir pressure, free energy and entropy between parallel plates"};
  app.name("casimir");
  app.require_subcommand(1);
  Options o;

  auto* force = app.add_subcommand("force", "pressure at each (a, T)");
  auto* free_energy = app.add_subcommand("free-energy", "free energy per area at each (a, T)");
  auto* thermo = app.add_subcommand("thermo", "pressure, F, U and S at each (a, T)");
  for (auto* cmd : {force, free_energy, thermo})
  {
    add_point_options(cmd, o);
    add_quadrature_options(cmd, o);
    cmd->add_option("--out", o.out_path, "write CSV here instead of stdout");
  }

  auto* sweep = app.add_subcommand("sweep", "grid over a and T (or a T)");
  sweep->add_option("--model", o.model, "dispersion model preset")->capture_default_str();
  sweep->add_option("--a", o.a_spec, "plate separation(s), um");
  sweep->add_option("--a-range", o.a_range, "lo:hi:n, um");
  sweep->add_option("--T", o.t_spec, "temperature(s), K");
  sweep->add_option("--T-range", o.t_range, "lo:hi:n, K");
  sweep->add_option("--aT-range", o.at_range, "lo:hi:n in reduced temperature a T");
  sweep->add_option("--quantity", o.quantity, "force, free-energy or thermo")
    ->check(CLI::IsMember({"force", "free-energy", "thermo"}))
    ->capture_default_str();
  add_quadrature_options(sweep, o);
  sweep->add_option("--out", o.out_path, "write CSV here instead of stdout");

  auto* modes = app.add_subcommand("modes", "per-Matsubara-mode share of the pressure");
  modes->add_option("--model", o.model, "dispersion model preset")->capture_default_str();
  modes->add_option("--a", o.a_spec, "plate separation, um")->required();
  modes->add_option("--T", o.t_spec, "temperature, K")->required();
  modes->add_option("--max-m", o.max_m, "last mode index to print");
  modes->add_flag("--coefficients", o.coefficients, "print A_m, B_m at fixed y instead");
  modes->add_option("--sample-m", o.sample_m, "mode indices for --coefficients")->capture_default_str();
  modes->add_option("--sample-y", o.sample_y, "y = q a values for --coefficients")->capture_default_str();
  add_quadrature_options(modes, o);
  modes->add_option("--out", o.out_path, "write CSV here instead of stdout");

  auto* toy = app.add_subcommand("toy", "induced free energy and entropy of the three-oscillator model");
  toy->add_option("--kind", o.kind, "coordinate, momentum or both")
    ->check(CLI::IsMember({"coordinate", "momentum", "both"}))
    ->capture_default_str();
  toy->add_option("--a1", o.a1)->capture_default_str();
  toy->add_option("--a2", o.a2)->capture_default_str();
  toy->add_option("--a3", o.a3)->capture_default_str();
  toy->add_option("--c", o.c)->capture_default_str();
  toy->add_option("--T", o.t_spec, "temperature(s)");
  toy->add_option("--T-range", o.t_range, "lo:hi:n (default 0.02:2:100)");
  toy->add_option("--out", o.out_path, "write CSV here instead of stdout");

  auto* nu = app.add_subcommand("nu", "Bloch-Grueneisen relaxation frequency");
  nu->add_option("--preset", o.preset, "relaxation preset")->capture_default_str();
  nu->add_option("--T", o.t_spec, "temperature(s), K");
  nu->add_option("--T-range", o.t_range, "lo:hi:n, K");
  nu->add_option("--out", o.out_path, "write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::ParseError& e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    auto em = open_output(o.out_path, out);
    auto& os = em.stream();
    if (force->parsed())
      return run_point(o, Quantity::Force, os);
    if (free_energy->parsed())
      return run_point(o, Quantity::FreeEnergy, os);
    if (thermo->parsed())
      return run_point(o, Quantity::Thermo, os);
    if (sweep->parsed())
      return run_sweep(o, os);
    if (modes->parsed())
      return run_modes(o, os);
    if (toy->parsed())
      return run_toy(o, os);
    return run_nu(o, os);
  }
  catch (const CLI::ParseError& e)
  {
    err << "casimir: " << e.what() << "\n";
    return exit_usage;
  }
  catch (const std::exception& e)
  {
    err << "casimir: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace casimir::cli
