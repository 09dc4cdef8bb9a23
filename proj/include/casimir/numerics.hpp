// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CASIMIR_NUMERICS_HPP
#define CASIMIR_NUMERICS_HPP

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimir::numerics
{

// Neumaier-compensated running sum. Order of add() calls fixes the result bit for bit.
class CompensatedSum
{
public:
  void add(double x) noexcept
  {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadratureResult
{
  double value = 0.0;
  double error = 0.0;
};

// Adaptive 15-point Gauss-Kronrod on [lo, hi] (hi may be +inf).
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, double rel_tol, unsigned max_depth = 18)
{
  QuadratureResult r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
    f, lo, hi, max_depth, rel_tol, &r.error);
  return r;
}

// Central difference with one Richardson step: (4 D(h/2) - D(h)) / 3, error O(h^4).
template <class F>
double richardson_derivative(F&& f, double x, double h)
{
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

inline bool relative_close(double a, double b, double rel)
{
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace casimir::numerics

#endif  // CASIMIR_NUMERICS_HPP
