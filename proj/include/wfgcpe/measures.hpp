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


#ifndef WFGCPE_MEASURES_HPP_
#define WFGCPE_MEASURES_HPP_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "wfgcpe/distribution.hpp"
#include "wfgcpe/quadrature.hpp"
#include "wfgcpe/weight.hpp"

namespace wfgcpe {

enum class Method { kClosedForm, kQuadrature, kDecomposition };

std::string_view to_string(Method method);

struct MeasureReport {
  double value = 0.0;
  quad::QuadratureResult quadrature;  // zeroed for closed forms
  Method method = Method::kQuadrature;
};

// CPE_g^psi(X) = 1/Gamma(g+1) int psi(x) K(x) (-ln K(x))^g dx.
// Dispatches to the model's closed form when it has one for psi's tag.
MeasureReport wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                     FractionalOrder gamma);

// Always integrates numerically, ignoring any closed form.
MeasureReport wfgcpe_quadrature(const DistributionModel& model,
                                const WeightFunction& psi,
                                FractionalOrder gamma);

// gamma -> 0+ limit Psi(s) - E[Psi(X)]. UnboundedSupport when s is infinite.
double wfgcpe_gamma_zero_limit(const DistributionModel& model,
                               const WeightFunction& psi);

// -int psi K ln K dx; the gamma = 1 member of the family.
double weighted_cpe(const DistributionModel& model, const WeightFunction& psi);

// wfgcpe(g) / (Gamma(g+1) * weighted_cpe^g). Equals 1 at g = 1 and tends
// to int psi K dx as g -> 0+.
MeasureReport normalized_wfgcpe(const DistributionModel& model,
                                const WeightFunction& psi,
                                FractionalOrder gamma);

// WFGCPE of the past lifetime X | X <= t.
double dynamic_wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                      FractionalOrder gamma, double t);

// tau(u) = 1/Gamma(g+1) int_u^s psi(x) (-ln K(x))^g dx, u in [lower, s).
double tau(const DistributionModel& model, const WeightFunction& psi,
           FractionalOrder gamma, double u);

// tau'(u) = -psi(u) (-ln K(u))^g / Gamma(g+1); zero beyond the support.
double tau_derivative(const DistributionModel& model, const WeightFunction& psi,
                      FractionalOrder gamma, double u);

// E[tau(X)] by nested quadrature; equals wfgcpe.
double expected_tau(const DistributionModel& model, const WeightFunction& psi,
                    FractionalOrder gamma);

// Weighted fractional generalized cumulative residual entropy,
// 1/Gamma(g+1) int psi(x) Kbar(x) (-ln Kbar(x))^g dx.
double wfgcre(const DistributionModel& model, const WeightFunction& psi,
              FractionalOrder gamma);

// WFGCPE of Y = aX + b: a/Gamma(g+1) int psi(ax+b) K(x)(-ln K(x))^g dx.
double affine_wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                     FractionalOrder gamma, double a, double b);

struct MonotoneFunction {
  std::function<double(double)> value;
  // Central difference when absent.
  std::optional<std::function<double(double)>> derivative;
};

// Left-sided Riemann-Liouville integral of f of the given order with
// respect to h on (a, t):
//   1/Gamma(order) int_a^t h'(s) f(s) (h(t) - h(s))^(order-1) ds.
// MonotonicityError when h is not strictly increasing on a probe grid.
double rl_fractional_integral(const std::function<double(double)>& f,
                              const MonotoneFunction& h, double order, double a,
                              double t);

// The Riemann-Liouville integral of order g+1 with h = ln K and
// f = psi K^2 / k over the whole (bounded) support.
double fractional_bridge(const DistributionModel& model,
                         const WeightFunction& psi, FractionalOrder gamma);

struct DiscreteDistribution {
  std::vector<double> probabilities;
  std::vector<double> weights;
};

// sum_i w_i p_i (-ln p_i)^alpha with 0 ln 0 = 0 and alpha in (0, 1].
double discrete_wfe(const DiscreteDistribution& d, FractionalOrder alpha);

}  // namespace wfgcpe

#endif  // WFGCPE_MEASURES_HPP_
