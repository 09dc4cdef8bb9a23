// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_ERRORS_HPP
#define CASIMIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace casimir
{

// Argument outside the mathematical domain of an operation (zeta <= 0, p < 1, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Asymptotic formula requested outside the regime where it holds.
class RegimeError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Degenerate media in the slab Green's function (kappa_3 == kappa_i).
class SingularConfiguration : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Oscillator system whose coupling matrix is not positive definite.
class InstabilityError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Malformed tabulated input. Carries the 1-based line number when known (0 otherwise).
class IngestionError : public std::runtime_error
{
public:
  IngestionError(const std::string& what, std::size_t line = 0)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line)
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace casimir

#endif  // CASIMIR_ERRORS_HPP
