// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return casimir::cli::run(args, std::cout, std::cerr);
}
