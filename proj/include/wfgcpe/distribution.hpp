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


#ifndef WFGCPE_DISTRIBUTION_HPP_
#define WFGCPE_DISTRIBUTION_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfgcpe/weight.hpp"

namespace wfgcpe {

enum class Family {
  kPower,
  kFrechet,
  kUniformShifted,
  kWeibull,
  kPrh,
  kAffine,
  kCustom,
};

std::string_view to_string(Family family);

// Immutable absolutely continuous distribution on (lower, upper), upper
// possibly infinite. Copies share the underlying state.
class DistributionModel {
 public:
  using Fn = std::function<double(double)>;
  // Closed-form value of a measure at (weight tag, gamma); nullopt when the
  // family has no formula for the tag. May throw ConstraintError.
  using ClosedForm = std::function<std::optional<double>(WeightTag, double)>;

  struct Spec {
    std::string name;
    Family family = Family::kCustom;
    std::vector<std::pair<std::string, double>> parameters;
    double lower = 0.0;
    double upper = 1.0;
    Fn cdf;
    Fn pdf;
    Fn quantile;
    // Optional higher-accuracy logarithms; derived from cdf when absent.
    Fn log_cdf;
    Fn log_survival;
    // K^-1(exp(l)) for l < 0, for callers that hold ln u rather than u.
    Fn log_quantile;
    ClosedForm wfgcpe_closed_form;
    ClosedForm normalized_closed_form;
  };

  explicit DistributionModel(Spec spec);

  // CDF K, clamped to 0 below and 1 above the support.
  double cdf(double x) const;
  double pdf(double x) const;
  // K^-1(u) for u in (0, 1).
  double quantile(double u) const;
  // K^-1(exp(log_u)); keeps full precision when u is close to one.
  double quantile_from_log(double log_u) const;
  double survival(double x) const;
  double log_cdf(double x) const;
  double log_survival(double x) const;
  // lambda(t) = k(t) / K(t).
  double reversed_hazard(double x) const;

  double lower() const { return spec_->lower; }
  double upper() const { return spec_->upper; }
  bool bounded() const;

  Family family() const { return spec_->family; }
  const std::string& name() const { return spec_->name; }
  const std::vector<std::pair<std::string, double>>& parameters() const {
    return spec_->parameters;
  }
  std::optional<double> parameter(const std::string& key) const;

  std::optional<double> closed_form_wfgcpe(WeightTag tag, double gamma) const;
  std::optional<double> closed_form_normalized(WeightTag tag,
                                               double gamma) const;

  const Spec& spec() const { return *spec_; }

 private:
  std::shared_ptr<const Spec> spec_;
};

DistributionModel make_power(double b, double c);
DistributionModel make_frechet(double b, double c);
DistributionModel make_uniform_shifted(double a);
// K(x) = 1 - exp(-theta x^shape).
DistributionModel make_weibull(double theta, double shape);
inline DistributionModel make_weibull_square(double theta) {
  return make_weibull(theta, 2.0);
}
// Distribution of a X + b.
DistributionModel affine_transform(const DistributionModel& base, double a,
                                   double b);

// User-supplied model, validated on a 1024-point probe grid: K monotone and
// consistent with its quantile, k integrating to one within 1e-8.
DistributionModel make_custom(std::string name, double lower, double upper,
                              DistributionModel::Fn cdf,
                              DistributionModel::Fn pdf,
                              DistributionModel::Fn quantile);

// E[g(X)] computed as the integral of g(K^-1(u)) over (0, 1).
double expectation(const DistributionModel& model,
                   const std::function<double(double)>& g);
double mean(const DistributionModel& model);

// Differential entropy -E[ln k(X)].
double differential_entropy(const DistributionModel& model);

// mu(t) = int_0^t K(x) dx / K(t).
double mean_inactivity_time(const DistributionModel& model, double t);

}  // namespace wfgcpe

#endif  // WFGCPE_DISTRIBUTION_HPP_
