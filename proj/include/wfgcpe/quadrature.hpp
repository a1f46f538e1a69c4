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


#ifndef WFGCPE_QUADRATURE_HPP_
#define WFGCPE_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <limits>

namespace wfgcpe::quad {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Endpoint behaviour flags. A log or algebraic flag on a finite endpoint
// switches on a polynomial grading substitution there; the infinite upper
// endpoint is always mapped onto a finite interval.
enum class Hint : unsigned {
  kNone = 0,
  kLogAtLo = 1u << 0,
  kLogAtHi = 1u << 1,
  kDecayAtInfinity = 1u << 2,
  kAlgebraicAtLo = 1u << 3,
  kAlgebraicAtHi = 1u << 4,
};

constexpr Hint operator|(Hint a, Hint b) {
  return static_cast<Hint>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Hint set, Hint flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

// Change of variables used for [A, inf).
enum class TailMap {
  kRational,     // x = A + 1/t - 1,  t in (0, 1]
  kExponential,  // x = A - ln t,     t in (0, 1]
};

struct Integrand {
  std::function<double(double)> eval;
  double lo = 0.0;
  double hi = 1.0;
  Hint hints = Hint::kNone;
  TailMap tail = TailMap::kRational;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool converged = false;
};

struct Tolerance {
  double abs = 1e-10;
  double rel = 1e-9;
};

inline constexpr std::size_t kMaxSubdivisions = std::size_t{1} << 16;

// Globally adaptive 10/21-point Gauss-Kronrod. The error estimate of each
// panel is |K21 - G10|, without heuristic rescaling. Throws NonConvergence
// when the budget runs out above tolerance and DomainError on a malformed
// domain or a non-finite integrand value.
QuadratureResult integrate(const Integrand& f, Tolerance tol = {},
                           std::size_t max_subdivisions = kMaxSubdivisions);

// Same as integrate() but reports non-convergence through the result flag.
QuadratureResult integrate_unchecked(
    const Integrand& f, Tolerance tol = {},
    std::size_t max_subdivisions = kMaxSubdivisions);

// Convenience for a plain finite or semi-infinite integral.
double integral(const std::function<double(double)>& f, double lo, double hi,
                Hint hints = Hint::kNone, Tolerance tol = {});

// ln Gamma(x) for x > 0; DomainError otherwise.
double log_gamma(double x);

// Gamma(x) for x > 0.
double gamma_fn(double x);

}  // namespace wfgcpe::quad

#endif  // WFGCPE_QUADRATURE_HPP_
