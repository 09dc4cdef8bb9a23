// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include "casimir/errors.hpp"
#include "casimir/matsubara.hpp"
#include "detail/accumulator.hpp"

namespace casimir::matsubara::reference
{

Sum sum_terms(const TermFn& term, const SumControl& control)
{
  if (control.m_max < 1 || control.m_zero < 1)
    throw DomainError("sum_terms: m_max and m_zero must be at least 1");
  detail::Accumulator acc(control);
  for (std::size_t m = 0; !acc.push(m, term(m)); ++m)
  {
  }
  return acc.take();
}

}  // namespace casimir::matsubara::reference
