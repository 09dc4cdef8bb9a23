// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <exception>

#include <omp.h>

#include "casimir/errors.hpp"
#include "casimir/matsubara.hpp"
#include "detail/accumulator.hpp"

namespace casimir::matsubara
{

// Terms are evaluated a chunk at a time in parallel, then fed to the
// accumulator in ascending m. Terms past the stopping point are discarded,
// so the result is bit-identical to the reference kernel.
Sum sum_terms(const TermFn& term, const SumControl& control)
{
  if (control.m_max < 1 || control.m_zero < 1)
    throw DomainError("sum_terms: m_max and m_zero must be at least 1");
  const int threads = control.threads > 0 ? control.threads : omp_get_max_threads();
  const std::size_t limit = std::min(control.m_max, control.m_zero);
  std::size_t chunk = static_cast<std::size_t>(std::max(4, 2 * threads));
  std::vector<Term> buffer;
  std::vector<std::exception_ptr> errors;
  detail::Accumulator acc(control);

  for (std::size_t m0 = 0; !acc.done(); m0 += buffer.size())
  {
    const std::size_t n = std::min(chunk, limit - m0);
    buffer.assign(n, Term{});
    errors.assign(n, nullptr);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    {
      const auto k = static_cast<std::size_t>(i);
      try
      {
        buffer[k] = term(m0 + k);
      }
      catch (...)
      {
        errors[k] = std::current_exception();
      }
    }
    // A failing term only matters if the serial order would have reached it.
    for (std::size_t i = 0; i < n; ++i)
    {
      if (errors[i])
        std::rethrow_exception(errors[i]);
      if (acc.push(m0 + i, buffer[i]))
        break;
    }
    chunk = std::min<std::size_t>(chunk * 2, 16 * static_cast<std::size_t>(threads));
  }
  return acc.take();
}

}  // namespace casimir::matsubara
