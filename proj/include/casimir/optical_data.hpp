// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_OPTICAL_DATA_HPP
#define CASIMIR_OPTICAL_DATA_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"

namespace casimir::optics
{

struct SpectralPoint
{
  double zeta;  // imaginary frequency, eV
  double eps;   // eps(i zeta)
};

// eps(i zeta) sampled on a grid. zeta strictly increasing, eps strictly
// decreasing and >= 1, at least two entries. Immutable once built.
class SpectralTable
{
public:
  SpectralTable(std::vector<SpectralPoint> entries, std::string source);

  std::span<const SpectralPoint> entries() const noexcept { return entries_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::vector<SpectralPoint> entries_;
  std::string source_;
};

struct OpticalPoint
{
  double omega;  // real frequency, eV
  double n_re;
  double n_im;

  double eps_imag() const noexcept { return 2.0 * n_re * n_im; }
};

// Complex refractive index n' + i n'' versus real frequency.
class OpticalConstantsTable
{
public:
  OpticalConstantsTable(std::vector<OpticalPoint> entries, std::string source);

  std::span<const OpticalPoint> entries() const noexcept { return entries_; }
  const std::string& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::vector<OpticalPoint> entries_;
  std::string source_;
};

// CSV with columns omega_ev,n_re,n_im. Optional header row, '#' comments.
OpticalConstantsTable load_optical_table(const std::filesystem::path& path);
OpticalConstantsTable parse_optical_table(std::istream& in, const std::string& source);

// eps(i zeta) = 1 + (2/pi) int_0^inf omega eps''(omega) / (omega^2 + zeta^2) d omega.
//
// Between samples eps'' is interpolated as a power law. Below the first sample
// eps'' ~ 1/omega (Drude form); above the last sample eps'' ~ omega^-3 with the
// amplitude fitted over the last decade of data.
double kramers_kronig(const OpticalConstantsTable& table, double zeta);

SpectralTable build_spectral_table(const OpticalConstantsTable& table, std::span<const double> zeta_grid);

// Log-log linear in (zeta, eps - 1). Outside the grid: eps - 1 ~ 1/zeta below,
// eps - 1 ~ 1/zeta^2 above, each anchored at the nearest node.
double interpolate(const SpectralTable& table, double zeta);

// CSV zeta_ev,eps with 17 significant digits so a reload is exact.
void write_spectral_table(std::ostream& out, const SpectralTable& table);
SpectralTable parse_spectral_table(std::istream& in, const std::string& source);

// Accepts either CSV layout; optical constants are transformed on zeta_grid.
SpectralTable load_model_table(const std::filesystem::path& path, std::span<const double> zeta_grid);

// Seven decades, [1e-4, 1e3] eV, 20 points per decade.
std::vector<double> default_zeta_grid();

std::vector<double> log_grid(double lo, double hi, std::size_t n);

// n' + i n'' of the real-frequency Drude permittivity 1 - wp^2 / (w (w + i nu)).
OpticalConstantsTable synthesize_drude_table(const dispersion::DrudeParams& params,
                                             std::span<const double> omegas);

}  // namespace casimir::optics

#endif  // CASIMIR_OPTICAL_DATA_HPP
