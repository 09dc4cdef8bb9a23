// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_DETAIL_ACCUMULATOR_HPP
#define CASIMIR_DETAIL_ACCUMULATOR_HPP

#include <cmath>

#include "casimir/matsubara.hpp"
#include "casimir/numerics.hpp"

namespace casimir::matsubara::detail
{

// Shared by the serial and parallel kernels so both stop at the same m.
class Accumulator
{
public:
  explicit Accumulator(const SumControl& control) : control_(control) {}

  // Adds term m; returns true once the sum is finished.
  bool push(std::size_t m, const Term& t)
  {
    tm_.add(t.tm);
    te_.add(t.te);
    if (control_.keep_terms)
      result_.terms.push_back(t);
    result_.terms_used = m + 1;
    if (m + 1 >= control_.m_zero)
      return finish(true);
    if (m >= 1)
    {
      const double partial = std::abs(tm_.value() + te_.value());
      if (std::abs(t.total()) < control_.rel_tol * partial)
        ++small_;
      else
        small_ = 0;
      if (small_ == 3)
        return finish(true);
    }
    if (m + 1 >= control_.m_max)
      return finish(false);
    return false;
  }

  bool done() const noexcept { return done_; }

  Sum take()
  {
    result_.tm = tm_.value();
    result_.te = te_.value();
    return std::move(result_);
  }

private:
  bool finish(bool converged)
  {
    result_.converged = converged;
    done_ = true;
    return true;
  }

  const SumControl& control_;
  numerics::CompensatedSum tm_;
  numerics::CompensatedSum te_;
  Sum result_;
  int small_ = 0;
  bool done_ = false;
};

}  // namespace casimir::matsubara::detail

#endif  // CASIMIR_DETAIL_ACCUMULATOR_HPP
