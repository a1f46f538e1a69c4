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


#ifndef WFGCPE_WEIGHT_HPP_
#define WFGCPE_WEIGHT_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wfgcpe {

class DistributionModel;

enum class Monotonicity { kIncreasing, kDecreasing, kNeither, kConstant };

enum class WeightTag { kOne, kX, kXSquared, kSqrtX, kExpNeg, kSelfDensity, kCustom };

std::string_view to_string(WeightTag tag);
std::string_view to_string(Monotonicity m);

// Positive real order gamma of the fractional measures.
class FractionalOrder {
 public:
  explicit FractionalOrder(double gamma);

  // Order alpha of the discrete fractional entropy, restricted to (0, 1].
  static FractionalOrder discrete(double alpha);

  double value() const { return gamma_; }
  operator double() const { return gamma_; }

 private:
  double gamma_;
};

// Nonnegative weight psi together with whatever is known about it: an
// antiderivative Psi (Psi' = psi), the derivative psi', and its monotonicity.
class WeightFunction {
 public:
  using Fn = std::function<double(double)>;

  WeightFunction(WeightTag tag, std::string name, Fn psi,
                 std::optional<Fn> antiderivative, std::optional<Fn> derivative,
                 Monotonicity monotonicity);

  static WeightFunction one();
  static WeightFunction x();
  static WeightFunction x_squared();
  static WeightFunction sqrt_x();
  // psi(x) = exp(-x), decreasing.
  static WeightFunction exp_neg();
  // psi(x) = x^p for p >= 0, Psi = x^(p+1)/(p+1).
  static WeightFunction power(double p);
  // psi = k, the density of the given model; Psi = K.
  static WeightFunction self_density(const DistributionModel& model);
  // Piecewise-linear psi through (x_i, y_i), constant beyond the ends, with
  // the exact (trapezoid) antiderivative anchored at Psi(0) = 0.
  static WeightFunction piecewise_linear(std::vector<double> xs,
                                         std::vector<double> ys);
  // Arbitrary psi. Without an antiderivative the empirical estimator cannot
  // use it unless with_numeric_antiderivative() is called.
  static WeightFunction custom(std::string name, Fn psi,
                               Monotonicity monotonicity = Monotonicity::kNeither,
                               std::optional<Fn> antiderivative = std::nullopt,
                               std::optional<Fn> derivative = std::nullopt);

  // Returns a copy whose Psi is built by cumulative quadrature from 0.
  WeightFunction with_numeric_antiderivative() const;

  double operator()(double x) const { return psi_(x); }
  double antiderivative(double x) const;
  bool has_antiderivative() const { return antiderivative_.has_value(); }
  // psi'(x): analytic when known, else a central difference with step
  // max(1e-6, 1e-6 x) (one-sided at x < h).
  double derivative(double x) const;
  bool has_analytic_derivative() const { return derivative_.has_value(); }

  WeightTag tag() const { return tag_; }
  const std::string& name() const { return name_; }
  Monotonicity monotonicity() const { return monotonicity_; }
  bool is_increasing() const {
    return monotonicity_ == Monotonicity::kIncreasing ||
           monotonicity_ == Monotonicity::kConstant;
  }
  bool is_decreasing() const {
    return monotonicity_ == Monotonicity::kDecreasing ||
           monotonicity_ == Monotonicity::kConstant;
  }
  const Fn& fn() const { return psi_; }

 private:
  WeightTag tag_;
  std::string name_;
  Fn psi_;
  std::optional<Fn> antiderivative_;
  std::optional<Fn> derivative_;
  Monotonicity monotonicity_;
};

// Looks up a builtin weight by its CLI name: one, x, x2, sqrtx, expneg.
std::optional<WeightFunction> builtin_weight(std::string_view name);

}  // namespace wfgcpe

#endif  // WFGCPE_WEIGHT_HPP_
