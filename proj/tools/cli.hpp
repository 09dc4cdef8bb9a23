// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_TOOLS_CLI_HPP
#define CASIMIR_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"

namespace casimir::cli
{

enum ExitCode
{
  exit_ok = 0,
  exit_usage = 1,
  exit_flagged = 2,
};

// Presets: ideal, ideal-mim, const:<eps>, drude-gold, drude-gold-bg,
// drude:<omega_p>:<nu>, plasma:<omega_p>, table:<path>. Relative table paths
// that do not exist are looked up under $CASIMIR_DATA_DIR.
dispersion::DispersionModel parse_model(const std::string& spec);

std::filesystem::path resolve_data_path(const std::string& path);

// Runs one command line. Rows go to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli

#endif  // CASIMIR_TOOLS_CLI_HPP
