// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/optical_data.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "casimir/errors.hpp"
#include "casimir/numerics.hpp"
#include "casimir/units.hpp"

namespace casimir::optics
{

namespace
{

std::string trim(std::string s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ','))
    out.push_back(trim(field));
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& out)
{
  if (s.empty())
    return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

bool looks_like_header(const std::vector<std::string>& fields)
{
  double dummy;
  return !fields.empty() && !parse_double(fields.front(), dummy);
}

struct CsvRow
{
  std::size_t line;
  std::vector<double> values;
};

// Numeric rows of a CSV stream; checks the optional header against `columns`.
std::vector<CsvRow> read_numeric_csv(std::istream& in, std::span<const char* const> columns)
{
  std::vector<CsvRow> rows;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, raw))
  {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    const auto fields = split_csv(line);
    if (!seen_data && rows.empty() && looks_like_header(fields))
    {
      bool ok = fields.size() == columns.size();
      for (std::size_t i = 0; ok && i < columns.size(); ++i)
        ok = fields[i] == columns[i];
      if (!ok)
      {
        std::string expected;
        for (std::size_t i = 0; i < columns.size(); ++i)
          expected += (i ? "," : "") + std::string(columns[i]);
        throw IngestionError("unexpected header '" + line + "', expected '" + expected + "'", line_no);
      }
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (fields.size() != columns.size())
      throw IngestionError("expected " + std::to_string(columns.size()) + " columns, found " +
                             std::to_string(fields.size()),
                           line_no);
    CsvRow row{line_no, {}};
    for (const auto& f : fields)
    {
      double v;
      if (!parse_double(f, v))
        throw IngestionError("cannot parse '" + f + "' as a number", line_no);
      row.values.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr const char* optical_columns[] = {"omega_ev", "n_re", "n_im"};
constexpr const char* spectral_columns[] = {"zeta_ev", "eps"};

// eps'' at omega inside [w0, w1], power law between nodes (linear when a node is zero).
double eps_imag_between(const OpticalPoint& lo, const OpticalPoint& hi, double omega)
{
  const double e0 = lo.eps_imag();
  const double e1 = hi.eps_imag();
  if (e0 > 0.0 && e1 > 0.0)
  {
    const double slope = std::log(e1 / e0) / std::log(hi.omega / lo.omega);
    return e0 * std::pow(omega / lo.omega, slope);
  }
  const double f = (omega - lo.omega) / (hi.omega - lo.omega);
  return e0 + f * (e1 - e0);
}

// int_W^inf omega^-2 / (omega^2 + zeta^2) d omega
double high_tail_kernel(double w, double zeta)
{
  const double r = zeta / w;
  if (r < 1e-2)
  {
    const double r2 = r * r;
    return (1.0 / 3.0 - r2 / 5.0 + r2 * r2 / 7.0 - r2 * r2 * r2 / 9.0) / (w * w * w);
  }
  return (1.0 / w - (units::pi / 2.0 - std::atan(w / zeta)) / zeta) / (zeta * zeta);
}

}  // namespace

SpectralTable::SpectralTable(std::vector<SpectralPoint> entries, std::string source)
  : entries_(std::move(entries)), source_(std::move(source))
{
  if (entries_.size() < 2)
    throw IngestionError("spectral table '" + source_ + "' needs at least two entries");
  for (std::size_t i = 0; i < entries_.size(); ++i)
  {
    const auto& e = entries_[i];
    if (!(e.zeta > 0.0) || !std::isfinite(e.zeta))
      throw IngestionError("spectral table '" + source_ + "': zeta must be positive at entry " +
                           std::to_string(i));
    if (!(e.eps >= 1.0) || !std::isfinite(e.eps))
      throw IngestionError("spectral table '" + source_ + "': eps must be >= 1 at entry " +
                           std::to_string(i));
    if (i > 0 && !(e.zeta > entries_[i - 1].zeta))
      throw IngestionError("spectral table '" + source_ + "': zeta not strictly increasing at entry " +
                           std::to_string(i));
    if (i > 0 && !(e.eps < entries_[i - 1].eps))
      throw IngestionError("spectral table '" + source_ + "': eps not strictly decreasing at entry " +
                           std::to_string(i));
  }
}

OpticalConstantsTable::OpticalConstantsTable(std::vector<OpticalPoint> entries, std::string source)
  : entries_(std::move(entries)), source_(std::move(source))
{
  if (entries_.empty())
    throw IngestionError("optical table '" + source_ + "' is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i)
  {
    const auto& e = entries_[i];
    if (!(e.omega > 0.0))
      throw IngestionError("optical table '" + source_ + "': omega must be positive at entry " +
                           std::to_string(i));
    if (e.n_im < 0.0)
      throw IngestionError("optical table '" + source_ + "': negative n_im at entry " + std::to_string(i));
    if (i > 0 && !(e.omega > entries_[i - 1].omega))
      throw IngestionError("optical table '" + source_ + "': omega not strictly increasing at entry " +
                           std::to_string(i));
  }
}

OpticalConstantsTable parse_optical_table(std::istream& in, const std::string& source)
{
  const auto rows = read_numeric_csv(in, optical_columns);
  std::vector<OpticalPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows)
  {
    const OpticalPoint p{row.values[0], row.values[1], row.values[2]};
    if (!(p.omega > 0.0))
      throw IngestionError(source + ": omega must be positive", row.line);
    if (p.n_im < 0.0)
      throw IngestionError(source + ": negative n_im", row.line);
    if (!points.empty())
    {
      if (p.omega == points.back().omega)
        throw IngestionError(source + ": duplicate omega " + std::to_string(p.omega), row.line);
      if (p.omega < points.back().omega)
        throw IngestionError(source + ": omega out of order", row.line);
    }
    points.push_back(p);
  }
  if (points.empty())
    throw IngestionError(source + ": no data rows");
  return OpticalConstantsTable(std::move(points), source);
}

OpticalConstantsTable load_optical_table(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw IngestionError("cannot open optical table " + path.string());
  return parse_optical_table(in, path.string());
}

double kramers_kronig(const OpticalConstantsTable& table, double zeta)
{
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw DomainError("kramers_kronig: imaginary frequency must be positive");
  const auto pts = table.entries();
  const double z2 = zeta * zeta;

  numerics::CompensatedSum sum;

  // Below the data: eps'' = C / omega with C = omega_0 eps''(omega_0).
  const double c_low = pts.front().omega * pts.front().eps_imag();
  sum.add(c_low / zeta * std::atan(pts.front().omega / zeta));

  // Tabulated range, integrated in t = ln(omega): omega^2 eps'' / (omega^2 + zeta^2) dt.
  using Gauss = boost::math::quadrature::gauss<double, 10>;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
  {
    const auto& lo = pts[i];
    const auto& hi = pts[i + 1];
    if (lo.eps_imag() == 0.0 && hi.eps_imag() == 0.0)
      continue;
    const double t0 = std::log(lo.omega);
    const double t1 = std::log(hi.omega);
    auto integrand = [&](double t) {
      const double w = std::exp(t);
      return w * w * eps_imag_between(lo, hi, w) / (w * w + z2);
    };
    sum.add(Gauss::integrate(integrand, t0, t1));
  }

  // Above the data: eps'' = B omega^-3, B fitted (geometric mean) over the last decade.
  const double w_max = pts.back().omega;
  double log_sum = 0.0;
  std::size_t n_fit = 0;
  for (auto it = pts.rbegin(); it != pts.rend() && it->omega >= 0.1 * w_max; ++it)
  {
    if (it->eps_imag() > 0.0)
    {
      log_sum += std::log(it->eps_imag() * it->omega * it->omega * it->omega);
      ++n_fit;
    }
  }
  if (n_fit > 0)
  {
    const double b_high = std::exp(log_sum / static_cast<double>(n_fit));
    sum.add(b_high * high_tail_kernel(w_max, zeta));
  }

  return 1.0 + 2.0 / units::pi * std::max(0.0, sum.value());
}

SpectralTable build_spectral_table(const OpticalConstantsTable& table, std::span<const double> zeta_grid)
{
  if (zeta_grid.empty())
    throw DomainError("build_spectral_table: empty frequency grid");
  for (std::size_t i = 0; i < zeta_grid.size(); ++i)
  {
    if (!(zeta_grid[i] > 0.0))
      throw DomainError("build_spectral_table: grid frequencies must be positive");
    if (i > 0 && !(zeta_grid[i] > zeta_grid[i - 1]))
      throw DomainError("build_spectral_table: grid must be strictly increasing");
  }
  std::vector<SpectralPoint> entries;
  entries.reserve(zeta_grid.size());
  for (double z : zeta_grid)
    entries.push_back({z, kramers_kronig(table, z)});
  for (std::size_t i = 1; i < entries.size(); ++i)
  {
    if (!(entries[i].eps < entries[i - 1].eps))
      throw IngestionError("data set '" + table.source() +
                           "' gives a non-monotone eps(i zeta) near zeta = " + std::to_string(entries[i].zeta) +
                           " eV");
  }
  return SpectralTable(std::move(entries), table.source());
}

double interpolate(const SpectralTable& table, double zeta)
{
  if (!(zeta > 0.0))
    throw DomainError("interpolate: imaginary frequency must be positive");
  const auto pts = table.entries();
  const auto& first = pts.front();
  const auto& last = pts.back();
  if (zeta <= first.zeta)
    return 1.0 + (first.eps - 1.0) * first.zeta / zeta;
  if (zeta >= last.zeta)
  {
    const double r = last.zeta / zeta;
    return 1.0 + (last.eps - 1.0) * r * r;
  }
  const auto hi = std::upper_bound(pts.begin(), pts.end(), zeta,
                                   [](double z, const SpectralPoint& p) { return z < p.zeta; });
  const auto lo = hi - 1;
  if (zeta == lo->zeta)
    return lo->eps;
  const double y0 = lo->eps - 1.0;
  const double y1 = hi->eps - 1.0;
  const double f = std::log(zeta / lo->zeta) / std::log(hi->zeta / lo->zeta);
  if (y0 > 0.0 && y1 > 0.0)
    return 1.0 + y0 * std::pow(y1 / y0, f);
  return 1.0 + y0 + f * (y1 - y0);
}

void write_spectral_table(std::ostream& out, const SpectralTable& table)
{
  out << "# source: " << table.source() << "\n";
  out << "zeta_ev,eps\n";
  char buf[64];
  for (const auto& p : table.entries())
  {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.zeta, p.eps);
    out << buf;
  }
}

SpectralTable parse_spectral_table(std::istream& in, const std::string& source)
{
  const auto rows = read_numeric_csv(in, spectral_columns);
  std::vector<SpectralPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows)
  {
    const SpectralPoint p{row.values[0], row.values[1]};
    if (!points.empty() && !(p.zeta > points.back().zeta))
      throw IngestionError(source + ": zeta not strictly increasing", row.line);
    if (!points.empty() && !(p.eps < points.back().eps))
      throw IngestionError(source + ": eps not strictly decreasing", row.line);
    points.push_back(p);
  }
  return SpectralTable(std::move(points), source);
}

SpectralTable load_model_table(const std::filesystem::path& path, std::span<const double> zeta_grid)
{
  std::ifstream in(path);
  if (!in)
    throw IngestionError("cannot open table " + path.string());
  std::string raw;
  std::string header;
  while (std::getline(in, raw))
  {
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#')
    {
      header = line;
      break;
    }
  }
  in.clear();
  in.seekg(0);
  if (header.rfind("zeta_ev", 0) == 0)
    return parse_spectral_table(in, path.string());
  const auto optical = parse_optical_table(in, path.string());
  return build_spectral_table(optical, zeta_grid);
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo * std::exp(step * static_cast<double>(i));
  g.back() = hi;
  return g;
}

std::vector<double> default_zeta_grid() { return log_grid(1e-4, 1e3, 141); }

OpticalConstantsTable synthesize_drude_table(const dispersion::DrudeParams& params,
                                             std::span<const double> omegas)
{
  std::vector<OpticalPoint> points;
  points.reserve(omegas.size());
  for (double w : omegas)
  {
    const std::complex<double> eps =
      1.0 - params.omega_p * params.omega_p / (w * std::complex<double>(w, params.nu));
    std::complex<double> n = std::sqrt(eps);
    if (n.imag() < 0.0)
      n = -n;
    points.push_back({w, n.real(), n.imag()});
  }
  std::ostringstream label;
  label << "drude-synthetic(omega_p=" << params.omega_p << ",nu=" << params.nu << ")";
  return OpticalConstantsTable(std::move(points), label.str());
}

}  // namespace casimir::optics
