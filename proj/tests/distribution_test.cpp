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

#include "wfgcpe/distribution.hpp"
#include "wfgcpe/errors.hpp"
#include "wfgcpe/measures.hpp"
#include "wfgcpe/prh.hpp"
#include "wfgcpe/weight.hpp"

namespace wfgcpe {
namespace {

TEST(Distribution, PowerBasics) {
  const auto m = make_power(2.0, 3.0);
  EXPECT_DOUBLE_EQ(m.lower(), 0.0);
  EXPECT_DOUBLE_EQ(m.upper(), 2.0);
  EXPECT_NEAR(m.cdf(1.0), 0.125, 1e-15);
  EXPECT_NEAR(m.pdf(1.0), 3.0 * 0.25 / 2.0, 1e-15);
  EXPECT_NEAR(m.quantile(0.125), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(m.cdf(-1.0), 0.0);
  EXPECT_DOUBLE_EQ(m.cdf(5.0), 1.0);
  EXPECT_TRUE(m.bounded());
  EXPECT_EQ(m.family(), Family::kPower);
  EXPECT_DOUBLE_EQ(*m.parameter("c"), 3.0);
}

TEST(Distribution, RejectsBadParameters) {
  EXPECT_THROW(make_power(0.0, 1.0), DomainError);
  EXPECT_THROW(make_power(1.0, -1.0), DomainError);
  EXPECT_THROW(make_frechet(1.0, NAN), DomainError);
  EXPECT_THROW(make_uniform_shifted(-0.5), DomainError);
  EXPECT_THROW(make_weibull(0.0, 2.0), DomainError);
}

TEST(Distribution, QuantileRoundTrip) {
  const DistributionModel models[] = {make_power(1, 2), make_frechet(1, 4),
                                      make_uniform_shifted(3),
                                      make_weibull(1.5, 0.5)};
  for (const auto& m : models) {
    for (double u : {0.01, 0.2, 0.5, 0.8, 0.99}) {
      EXPECT_NEAR(m.cdf(m.quantile(u)), u, 1e-12) << m.name();
      EXPECT_NEAR(m.quantile_from_log(std::log(u)), m.quantile(u),
                  1e-12 * (1 + m.quantile(u)))
          << m.name();
    }
  }
}

TEST(Distribution, FrechetLogQuantileKeepsPrecisionNearOne) {
  const auto m = make_frechet(1, 4);
  // K^-1(exp(-1e-20)) = (1e20)^(1/4) = 1e5; the plain quantile loses this.
  EXPECT_NEAR(m.quantile_from_log(-1e-20), 1e5, 1e-6 * 1e5);
}

TEST(Distribution, PowerClosedFormValues) {
  const auto m = make_power(1, 2);
  EXPECT_NEAR(*m.closed_form_wfgcpe(WeightTag::kX, 0.5), 1.0 / (2 * std::pow(2, 1.5)),
              1e-15);
  EXPECT_NEAR(*make_power(2, 3).closed_form_wfgcpe(WeightTag::kX, 1.0), 0.48,
              1e-14);
  EXPECT_NEAR(*m.closed_form_wfgcpe(WeightTag::kXSquared, 0.75),
              1.0 / (2 * std::pow(2.5, 1.75)), 1e-15);
  EXPECT_FALSE(m.closed_form_wfgcpe(WeightTag::kSqrtX, 0.5).has_value());
}

TEST(Distribution, FrechetClosedFormsAndThresholds) {
  const auto m = make_frechet(1, 4);
  EXPECT_NEAR(*m.closed_form_wfgcpe(WeightTag::kX, 1.0),
              0.443113462726379006824541870835, 1e-14);
  EXPECT_NEAR(*make_frechet(2, 5).closed_form_wfgcpe(WeightTag::kX, 1.5),
              0.188862819172851418698739803649, 1e-14);
  // x^2 needs gamma > 3/4, x only gamma > 1/2.
  EXPECT_THROW(m.closed_form_wfgcpe(WeightTag::kXSquared, 0.5), ConstraintError);
  EXPECT_THROW(m.closed_form_wfgcpe(WeightTag::kX, 0.5), ConstraintError);
  EXPECT_NO_THROW(m.closed_form_wfgcpe(WeightTag::kX, 0.75));
}

TEST(Distribution, ClosedFormsSurviveExtremeOrder) {
  const auto m = make_power(1, 2);
  const double v = *m.closed_form_wfgcpe(WeightTag::kX, 1e9);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GE(v, 0.0);
  EXPECT_LT(v, 1e-300);
}

TEST(Distribution, WeibullAndAffine) {
  const auto w = make_weibull(2.0, 2.0);
  EXPECT_NEAR(w.cdf(1.0), 1 - std::exp(-2.0), 1e-15);
  EXPECT_NEAR(mean(make_weibull(1.0, 1.0)), 1.0, 1e-9);
  const auto y = affine_transform(make_uniform_shifted(0), 2.0, 1.0);
  EXPECT_DOUBLE_EQ(y.lower(), 1.0);
  EXPECT_DOUBLE_EQ(y.upper(), 3.0);
  EXPECT_NEAR(y.cdf(2.0), 0.5, 1e-15);
  EXPECT_NEAR(y.pdf(2.0), 0.5, 1e-15);
}

TEST(Distribution, WeibullLogCdfTail) {
  const auto w = make_weibull(1.0, 0.5);
  // z = 40: K rounds to 1 but ln K does not.
  EXPECT_NEAR(w.log_cdf(1600.0) / -std::exp(-40.0), 1.0, 1e-12);
  EXPECT_NEAR(w.log_cdf(0.01), std::log(-std::expm1(-0.1)), 1e-15);
  const auto r = wfgcpe_quadrature(w, WeightFunction::x_squared(), FractionalOrder(0.5));
  EXPECT_TRUE(r.quadrature.converged);
}

TEST(Distribution, CustomModelValidation) {
  const auto ok = make_custom(
      "tri", 0, 1, [](double x) { return x * x; }, [](double x) { return 2 * x; },
      [](double u) { return std::sqrt(u); });
  EXPECT_NEAR(mean(ok), 2.0 / 3.0, 1e-10);
  // Density that does not integrate to one.
  EXPECT_THROW(make_custom(
                   "bad", 0, 1, [](double x) { return x * x; },
                   [](double x) { return x; }, [](double u) { return std::sqrt(u); }),
               ValidationError);
}

TEST(Distribution, MeanInactivityTime) {
  EXPECT_NEAR(mean_inactivity_time(make_uniform_shifted(0), 1.0), 0.5, 1e-12);
  EXPECT_NEAR(mean_inactivity_time(make_power(1, 2), 1.0), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(mean_inactivity_time(make_uniform_shifted(0), 1e-8), 0.5e-8, 1e-15);
  EXPECT_THROW(mean_inactivity_time(make_power(1, 2), 2.0), DomainError);
}

TEST(Distribution, DifferentialEntropy) {
  EXPECT_NEAR(differential_entropy(make_uniform_shifted(3)), 0.0, 1e-12);
  // K = x^2: H = -E ln(2X) = 1/2 - ln 2
  EXPECT_NEAR(differential_entropy(make_power(1, 2)), 0.5 - std::log(2.0), 1e-10);
}

TEST(Prh, TransformProperties) {
  const auto base = make_uniform_shifted(0);
  const auto same = prh_transform(base, PrhParameter(1.0));
  for (double x : {0.1, 0.5, 0.9}) EXPECT_NEAR(same.cdf(x), base.cdf(x), 1e-15);
  const auto two = prh_transform(base, PrhParameter(2.0));
  const auto power = make_power(1, 2);
  for (double x : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(two.cdf(x), power.cdf(x), 1e-15);
    EXPECT_NEAR(two.pdf(x), power.pdf(x), 1e-14);
    EXPECT_NEAR(two.quantile(x), power.quantile(x), 1e-14);
  }
  EXPECT_NEAR(two.reversed_hazard(0.5), 4.0, 1e-13);
  EXPECT_THROW(PrhParameter(0.0), DomainError);
  EXPECT_THROW(PrhParameter(-2.0), DomainError);
}

}  // namespace
}  // namespace wfgcpe
