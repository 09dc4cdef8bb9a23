// Copyright The casimir-thermal Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/matsubara.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::matsubara;

namespace
{

Term geometric(std::size_t m)
{
  const double w = m == 0 ? 0.5 : 1.0;
  return {w * std::pow(0.5, static_cast<double>(m)), w * std::pow(0.25, static_cast<double>(m))};
}

// Slowly decaying, sign-alternating TE part.
Term wiggly(std::size_t m)
{
  const double x = static_cast<double>(m) + 1.0;
  return {1.0 / (x * x * x), (m % 2 ? -1.0 : 1.0) * std::exp(-0.3 * x) * std::sin(x)};
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// Index at which the three-small-terms rule stops, computed directly.
std::size_t expected_terms(const TermFn& f, double rel_tol)
{
  double partial = 0.0;
  int small = 0;
  for (std::size_t m = 0;; ++m)
  {
    const Term t = f(m);
    partial += t.total();
    if (m >= 1)
    {
      small = std::abs(t.total()) < rel_tol * std::abs(partial) ? small + 1 : 0;
      if (small == 3)
        return m + 1;
    }
  }
}

}  // namespace

TEST_CASE("geometric series")
{
  SumControl c;
  c.rel_tol = 1e-12;
  using Kernel = Sum (*)(const TermFn&, const SumControl&);
  for (Kernel kernel : {Kernel{&matsubara::sum_terms}, Kernel{&reference::sum_terms}})
  {
    const auto s = kernel(geometric, c);
    CHECK(s.converged);
    CHECK(s.tm == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(s.te == doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-12));
    CHECK(s.terms_used == expected_terms(geometric, 1e-12));
  }
}

TEST_CASE("stopping at m_zero and m_max")
{
  SumControl c;
  c.rel_tol = 1e-300;
  c.m_zero = 17;
  auto s = matsubara::sum_terms(wiggly, c);
  CHECK(s.converged);
  CHECK(s.terms_used == 17);
  c.m_zero = static_cast<std::size_t>(-1);
  c.m_max = 23;
  s = matsubara::sum_terms(wiggly, c);
  CHECK_FALSE(s.converged);
  CHECK(s.terms_used == 23);
  const auto r = reference::sum_terms(wiggly, c);
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used == 23);
  c.m_max = 0;
  CHECK_THROWS_AS(matsubara::sum_terms(wiggly, c), DomainError);
  CHECK_THROWS_AS(reference::sum_terms(wiggly, c), DomainError);
}

TEST_CASE("parallel kernel is bit-identical to the reference kernel")
{
  for (double tol : {1e-6, 1e-9, 1e-13})
    for (int threads : {1, 2, 3, 4, 8})
      for (const TermFn& f : {TermFn(geometric), TermFn(wiggly)})
      {
        SumControl c;
        c.rel_tol = tol;
        c.threads = threads;
        c.keep_terms = true;
        const auto a = matsubara::sum_terms(f, c);
        const auto b = reference::sum_terms(f, c);
        CHECK(same_bits(a.tm, b.tm));
        CHECK(same_bits(a.te, b.te));
        CHECK(a.terms_used == b.terms_used);
        CHECK(a.converged == b.converged);
        CHECK(a.terms.size() == a.terms_used);
        CHECK(b.terms.size() == b.terms_used);
      }
}

TEST_CASE("errors beyond the stopping point are not reported")
{
  SumControl c;
  c.rel_tol = 1e-6;
  c.threads = 4;
  const std::size_t stop = expected_terms(geometric, 1e-6);
  auto late = [&](std::size_t m) {
    if (m == stop + 2)
      throw std::runtime_error("late");
    return geometric(m);
  };
  CHECK_NOTHROW(matsubara::sum_terms(late, c));
  auto early = [&](std::size_t m) {
    if (m == stop - 2)
      throw std::runtime_error("early");
    return geometric(m);
  };
  CHECK_THROWS_AS(matsubara::sum_terms(early, c), std::runtime_error);
  CHECK_THROWS_AS(reference::sum_terms(early, c), std::runtime_error);
}
