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


#include "wfgcpe/weight.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "wfgcpe/distribution.hpp"
#include "wfgcpe/errors.hpp"
#include "wfgcpe/quadrature.hpp"

namespace wfgcpe {

std::string_view to_string(WeightTag tag) {
  switch (tag) {
    case WeightTag::kOne: return "one";
    case WeightTag::kX: return "x";
    case WeightTag::kXSquared: return "x2";
    case WeightTag::kSqrtX: return "sqrtx";
    case WeightTag::kExpNeg: return "expneg";
    case WeightTag::kSelfDensity: return "density";
    case WeightTag::kCustom: return "custom";
  }
  return "unknown";
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::kIncreasing: return "increasing";
    case Monotonicity::kDecreasing: return "decreasing";
    case Monotonicity::kNeither: return "neither";
    case Monotonicity::kConstant: return "constant";
  }
  return "unknown";
}

FractionalOrder::FractionalOrder(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("fractional order must be a finite positive real");
  }
}

FractionalOrder FractionalOrder::discrete(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("discrete fractional order must lie in (0, 1]");
  }
  return FractionalOrder(alpha);
}

WeightFunction::WeightFunction(WeightTag tag, std::string name, Fn psi,
                               std::optional<Fn> antiderivative,
                               std::optional<Fn> derivative,
                               Monotonicity monotonicity)
    : tag_(tag),
      name_(std::move(name)),
      psi_(std::move(psi)),
      antiderivative_(std::move(antiderivative)),
      derivative_(std::move(derivative)),
      monotonicity_(monotonicity) {
  if (!psi_) throw DomainError("weight function has no evaluation function");
}

WeightFunction WeightFunction::one() {
  return WeightFunction(
      WeightTag::kOne, "one", [](double) { return 1.0; },
      Fn([](double x) { return x; }), Fn([](double) { return 0.0; }),
      Monotonicity::kConstant);
}

WeightFunction WeightFunction::x() {
  return WeightFunction(
      WeightTag::kX, "x", [](double x) { return x; },
      Fn([](double x) { return 0.5 * x * x; }), Fn([](double) { return 1.0; }),
      Monotonicity::kIncreasing);
}

WeightFunction WeightFunction::x_squared() {
  return WeightFunction(
      WeightTag::kXSquared, "x2", [](double x) { return x * x; },
      Fn([](double x) { return x * x * x / 3.0; }),
      Fn([](double x) { return 2.0 * x; }), Monotonicity::kIncreasing);
}

WeightFunction WeightFunction::sqrt_x() {
  return WeightFunction(
      WeightTag::kSqrtX, "sqrtx", [](double x) { return std::sqrt(x); },
      Fn([](double x) { return 2.0 / 3.0 * x * std::sqrt(x); }),
      Fn([](double x) { return 0.5 / std::sqrt(x); }),
      Monotonicity::kIncreasing);
}

WeightFunction WeightFunction::exp_neg() {
  return WeightFunction(
      WeightTag::kExpNeg, "expneg", [](double x) { return std::exp(-x); },
      Fn([](double x) { return -std::expm1(-x); }),
      Fn([](double x) { return -std::exp(-x); }), Monotonicity::kDecreasing);
}

WeightFunction WeightFunction::power(double p) {
  if (!(p >= 0.0)) throw DomainError("weight exponent must be nonnegative");
  if (p == 0.0) return one();
  if (p == 1.0) return x();
  if (p == 2.0) return x_squared();
  if (p == 0.5) return sqrt_x();
  return WeightFunction(
      WeightTag::kCustom, "x^" + std::to_string(p),
      [p](double x) { return std::pow(x, p); },
      Fn([p](double x) { return std::pow(x, p + 1.0) / (p + 1.0); }),
      Fn([p](double x) { return p * std::pow(x, p - 1.0); }),
      Monotonicity::kIncreasing);
}

WeightFunction WeightFunction::self_density(const DistributionModel& model) {
  return WeightFunction(
      WeightTag::kSelfDensity, "density",
      [model](double x) { return model.pdf(x); },
      Fn([model](double x) { return model.cdf(x); }), std::nullopt,
      Monotonicity::kNeither);
}

WeightFunction WeightFunction::piecewise_linear(std::vector<double> xs,
                                                std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("piecewise-linear weight needs >= 2 matching knots");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]) || ys[i] < 0.0 ||
        xs[i] < 0.0) {
      throw DomainError("piecewise-linear weight knots must be finite, >= 0");
    }
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw DomainError("piecewise-linear weight abscissae must increase");
    }
  }
  // Psi at each knot, with psi = ys.front() on [0, xs.front()].
  std::vector<double> cum(xs.size());
  cum[0] = ys[0] * xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    cum[i] = cum[i - 1] + 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
  }

  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    up = up && ys[i] >= ys[i - 1];
    down = down && ys[i] <= ys[i - 1];
  }
  const Monotonicity mono = up && down ? Monotonicity::kConstant
                            : up       ? Monotonicity::kIncreasing
                            : down     ? Monotonicity::kDecreasing
                                       : Monotonicity::kNeither;

  auto segment = [xs](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    return static_cast<std::size_t>(it - xs.begin());  // first knot > x
  };
  Fn psi = [xs, ys, segment](double x) {
    const std::size_t j = segment(x);
    if (j == 0) return ys.front();
    if (j == xs.size()) return ys.back();
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
  };
  Fn big_psi = [xs, ys, cum, segment](double x) {
    const std::size_t j = segment(x);
    if (j == 0) return ys.front() * x;
    if (j == xs.size()) return cum.back() + ys.back() * (x - xs.back());
    const double h = x - xs[j - 1];
    const double slope = (ys[j] - ys[j - 1]) / (xs[j] - xs[j - 1]);
    return cum[j - 1] + ys[j - 1] * h + 0.5 * slope * h * h;
  };
  Fn dpsi = [xs, ys, segment](double x) {
    const std::size_t j = segment(x);
    if (j == 0 || j == xs.size()) return 0.0;
    return (ys[j] - ys[j - 1]) / (xs[j] - xs[j - 1]);
  };
  return WeightFunction(WeightTag::kCustom, "piecewise-linear", std::move(psi),
                        std::move(big_psi), std::move(dpsi), mono);
}

WeightFunction WeightFunction::custom(std::string name, Fn psi,
                                      Monotonicity monotonicity,
                                      std::optional<Fn> antiderivative,
                                      std::optional<Fn> derivative) {
  return WeightFunction(WeightTag::kCustom, std::move(name), std::move(psi),
                        std::move(antiderivative), std::move(derivative),
                        monotonicity);
}

WeightFunction WeightFunction::with_numeric_antiderivative() const {
  WeightFunction copy = *this;
  Fn psi = psi_;
  copy.antiderivative_ = Fn([psi](double x) {
    if (x <= 0.0) return 0.0;
    return quad::integral(psi, 0.0, x, quad::Hint::kAlgebraicAtLo,
                          quad::Tolerance{1e-12, 1e-12});
  });
  return copy;
}

double WeightFunction::antiderivative(double x) const {
  if (!antiderivative_) {
    throw WeightAntiderivativeUnavailable("weight '" + name_ +
                                          "' has no antiderivative");
  }
  return (*antiderivative_)(x);
}

double WeightFunction::derivative(double x) const {
  if (derivative_) return (*derivative_)(x);
  const double h = std::max(1e-6, 1e-6 * std::abs(x));
  if (x - h < 0.0) return (psi_(x + h) - psi_(x)) / h;
  return (psi_(x + h) - psi_(x - h)) / (2.0 * h);
}

std::optional<WeightFunction> builtin_weight(std::string_view name) {
  if (name == "one") return WeightFunction::one();
  if (name == "x") return WeightFunction::x();
  if (name == "x2") return WeightFunction::x_squared();
  if (name == "sqrtx") return WeightFunction::sqrt_x();
  if (name == "expneg") return WeightFunction::exp_neg();
  return std::nullopt;
}

}  // namespace wfgcpe
