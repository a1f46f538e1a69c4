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


#ifndef WFGCPE_EMPIRICAL_HPP_
#define WFGCPE_EMPIRICAL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wfgcpe/weight.hpp"

namespace wfgcpe {

// Observations T_1..T_n, n >= 2, all >= 0. Normally sorted ascending; the
// as_listed() form keeps a published ordering verbatim, even when it is not
// monotone, so estimates can be reproduced exactly as printed.
class EmpiricalSample {
 public:
  // Validates and sorts. ValidationError on n < 2, negative or non-finite
  // values.
  explicit EmpiricalSample(std::vector<double> values,
                           std::string source = "memory");
  static EmpiricalSample as_listed(std::vector<double> values,
                                   std::string source);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const std::string& source() const { return source_; }
  bool is_sorted() const { return sorted_; }
  double min() const;
  double max() const;

 private:
  EmpiricalSample(std::vector<double> values, std::string source, bool sort);

  std::vector<double> values_;
  std::string source_;
  bool sorted_ = true;
};

// K_n(x) = #{T_i <= x} / n.
double empirical_cdf(const EmpiricalSample& sample, double x);

// Z_l = Psi(T_{l+1}) - Psi(T_l), l = 1..n-1, in sample order.
struct SpacingSummary {
  std::vector<double> z;
  WeightTag weight_tag = WeightTag::kCustom;
};

// WeightAntiderivativeUnavailable when psi carries no Psi.
SpacingSummary spacings(const EmpiricalSample& sample, const WeightFunction& psi);

// Plug-in estimator: 1/Gamma(g+1) sum_l Z_l (l/n) (-ln(l/n))^g.
double empirical_wfgcpe(const EmpiricalSample& sample, const WeightFunction& psi,
                        FractionalOrder gamma);

// The same estimator obtained by integrating psi K_n (-ln K_n)^g with the
// step CDF, one quadrature per gap. Requires a sorted sample.
double empirical_wfgcpe_direct(const EmpiricalSample& sample,
                               const WeightFunction& psi, FractionalOrder gamma);

struct SamplingMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// kPerSpacing sums the per-spacing variances only, treating the n-1 spacings
// as independent. kJointSpacing adds the covariance -1/((n+1)^2 (n+2))
// between distinct uniform spacings, which gives the exact variance.
enum class VarianceForm { kPerSpacing, kJointSpacing };

// Population K(x) = x^2 on (0, 1), psi = x.
SamplingMoments exact_moments_power_square(
    std::size_t n, FractionalOrder gamma,
    VarianceForm form = VarianceForm::kPerSpacing);

// Population K(x) = 1 - exp(-theta x^2), psi = x. The spacings of the
// exponential order statistics are independent, so the variance is exact.
SamplingMoments exact_moments_weibull(std::size_t n, FractionalOrder gamma,
                                      double theta);

// psi = k of any continuous population; the spacings are uniform spacings.
SamplingMoments exact_moments_self_weight(
    std::size_t n, FractionalOrder gamma,
    VarianceForm form = VarianceForm::kPerSpacing);

enum class Reading { kLiteral, kCorrected };
std::string_view to_string(Reading reading);

inline constexpr std::string_view kBloodCancerTag = "blood_cancer_43";

// Builtin lifetimes (days) of 43 blood cancer patients. The literal reading
// keeps the listing exactly, including the out-of-order entry 15999; the
// corrected reading replaces it with 1599 and sorts.
EmpiricalSample blood_cancer_43(Reading reading);

// Loads the builtin tag or a file of numbers separated by commas, semicolons
// or whitespace. '#' starts a comment. A file whose first line is
// "# order: as-listed" keeps its order; any other file is sorted.
// ParseError (with line number) on malformed or empty input; ValidationError
// on negative values or n < 2.
EmpiricalSample load_dataset(const std::string& path_or_tag,
                             Reading reading = Reading::kCorrected);

// Writes one value per line at full precision, preserving the order flag so
// load_dataset() reproduces the sample exactly.
void export_dataset(const EmpiricalSample& sample, const std::string& path);

}  // namespace wfgcpe

#endif  // WFGCPE_EMPIRICAL_HPP_
