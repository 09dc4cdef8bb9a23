// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_MATSUBARA_HPP
#define CASIMIR_MATSUBARA_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace casimir::matsubara
{

struct Term
{
  double tm = 0.0;
  double te = 0.0;

  double total() const noexcept { return tm + te; }
};

// term(m) must already carry the primed-sum weight (one half at m = 0).
using TermFn = std::function<Term(std::size_t m)>;

struct SumControl
{
  double rel_tol = 1e-9;
  std::size_t m_max = 100000;
  // Terms with m >= m_zero vanish identically; reaching it counts as converged.
  std::size_t m_zero = static_cast<std::size_t>(-1);
  bool keep_terms = false;
  int threads = 0;  // 0: OpenMP default
};

struct Sum
{
  double tm = 0.0;
  double te = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
  std::vector<Term> terms;  // filled when keep_terms

  double total() const noexcept { return tm + te; }
};

// Ascending-m compensated accumulation. Stops after three consecutive terms
// each below rel_tol * |partial sum|, at m_zero, or at m_max (not converged).
Sum sum_terms(const TermFn& term, const SumControl& control);

namespace reference
{
// Single-threaded kernel with the same stopping rule, kept as the oracle for sum_terms.
Sum sum_terms(const TermFn& term, const SumControl& control);
}  // namespace reference

}  // namespace casimir::matsubara

#endif  // CASIMIR_MATSUBARA_HPP
