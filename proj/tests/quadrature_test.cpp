// Copyright 2026 The wfgcpe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>

#include <gtest/gtest.h>

#include "wfgcpe/errors.hpp"
#include "wfgcpe/quadrature.hpp"

namespace wfgcpe::quad {
namespace {

TEST(Quadrature, PolynomialIsExact) {
  const double v = integral([](double x) { return 3 * x * x; }, 0.0, 2.0);
  EXPECT_NEAR(v, 8.0, 1e-13);
}

TEST(Quadrature, LogSingularityAtLowerEnd) {
  // int_0^1 -ln x dx = 1
  const double v =
      integral([](double x) { return -std::log(x); }, 0.0, 1.0, Hint::kLogAtLo);
  EXPECT_NEAR(v, 1.0, 1e-10);
}

TEST(Quadrature, AlgebraicSingularityAtUpperEnd) {
  // int_0^1 (1-x)^-0.5 dx = 2
  const double v = integral([](double x) { return 1.0 / std::sqrt(1.0 - x); },
                            0.0, 1.0, Hint::kAlgebraicAtHi);
  EXPECT_NEAR(v, 2.0, 1e-9);
}

TEST(Quadrature, SemiInfiniteBothTailMaps) {
  Integrand f;
  f.eval = [](double x) { return std::exp(-x) * x; };
  f.lo = 0.0;
  f.hi = kInfinity;
  f.hints = Hint::kDecayAtInfinity;
  const double rational = integrate(f).value;
  f.tail = TailMap::kExponential;
  const double exponential = integrate(f).value;
  EXPECT_NEAR(rational, 1.0, 1e-10);
  EXPECT_NEAR(exponential, 1.0, 1e-9);
}

TEST(Quadrature, Linearity) {
  auto f = [](double x) { return std::sin(x) + 1.0; };
  auto g = [](double x) { return std::sqrt(x); };
  const double a = 2.5, b = -0.75;
  const double lhs =
      integral([&](double x) { return a * f(x) + b * g(x); }, 0.0, 3.0,
               Hint::kAlgebraicAtLo);
  const double rhs = a * integral(f, 0.0, 3.0) +
                     b * integral(g, 0.0, 3.0, Hint::kAlgebraicAtLo);
  EXPECT_NEAR(lhs, rhs, 1e-10);
}

TEST(Quadrature, ExpectedSubdivisionsReported) {
  Integrand f;
  f.eval = [](double x) { return std::cos(x); };
  f.lo = 0;
  f.hi = 1;
  const auto r = integrate(f);
  EXPECT_TRUE(r.converged);
  EXPECT_GE(r.subdivisions, 1u);
  EXPECT_LE(r.abs_error_estimate, 1e-10);
}

TEST(Quadrature, NonConvergenceThrowsAndUncheckedReports) {
  Integrand f;
  f.eval = [](double x) { return std::sin(1.0 / x) / x; };
  f.lo = 0.0;
  f.hi = 1.0;
  EXPECT_THROW(integrate(f, {1e-15, 1e-15}, 16), NonConvergence);
  const auto r = integrate_unchecked(f, {1e-15, 1e-15}, 16);
  EXPECT_FALSE(r.converged);
}

TEST(Quadrature, MalformedDomain) {
  Integrand f;
  f.eval = [](double) { return 1.0; };
  f.lo = 1.0;
  f.hi = 0.0;
  EXPECT_THROW(integrate(f), DomainError);
  f.lo = 0.0;
  f.hi = 1.0;
  f.eval = [](double) { return NAN; };
  EXPECT_THROW(integrate(f), DomainError);
}

TEST(Quadrature, LogGamma) {
  EXPECT_NEAR(log_gamma(1.25), -0.0982718364218131614638538, 1e-14);
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(M_PI), 1e-14);
  EXPECT_NEAR(log_gamma(171.5), std::lgamma(171.5), 1e-10);
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.0), DomainError);
}

}  // namespace
}  // namespace wfgcpe::quad
