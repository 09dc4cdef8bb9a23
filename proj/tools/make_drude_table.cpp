// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

// Writes the real-frequency optical constants of the gold Drude model as
// omega_ev,n_re,n_im. Usage: make_drude_table [output.csv]

#include <cstdio>
#include <fstream>
#include <iostream>

#include "casimir/dispersion.hpp"
#include "casimir/optical_data.hpp"

int main(int argc, char** argv)
{
  const char* path = argc > 1 ? argv[1] : "gold_drude_synthetic.csv";
  const auto omegas = casimir::optics::log_grid(1e-5, 1e4, 361);
  const auto table = casimir::optics::synthesize_drude_table(casimir::dispersion::gold_drude(), omegas);
  std::ofstream out(path);
  if (!out)
  {
    std::cerr << "make_drude_table: cannot open " << path << "\n";
    return 1;
  }
  out << "# gold Drude model, omega_p = 9.0 eV, nu = 0.035 eV\n";
  out << "omega_ev,n_re,n_im\n";
  char buf[96];
  for (const auto& p : table.entries())
  {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.omega, p.n_re, p.n_im);
    out << buf;
  }
  return 0;
}
