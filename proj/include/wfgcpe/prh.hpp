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


#ifndef WFGCPE_PRH_HPP_
#define WFGCPE_PRH_HPP_

#include <span>
#include <vector>

#include "wfgcpe/distribution.hpp"
#include "wfgcpe/weight.hpp"

namespace wfgcpe {

// Proportionality constant eta > 0 of the reversed hazard model K2 = K1^eta.
class PrhParameter {
 public:
  explicit PrhParameter(double eta);
  double value() const { return eta_; }

 private:
  double eta_;
};

// E(g)  = E[X2 psi(X2) (-ln K2(X2))^(g-1)] / Gamma(g)
// E~(g) = E[X2 psi'(X2) (-ln K2(X2))^(g-1) / lambda1(X2)] / Gamma(g)
struct PrhExpectationTerms {
  double e_term = 0.0;
  double e_tilde_term = 0.0;
  double order = 0.0;
};

// K2 = K1^eta, k2 = eta K1^(eta-1) k1, reversed hazard eta * lambda1.
DistributionModel prh_transform(const DistributionModel& base, PrhParameter eta);

// Both expectations at order gamma. Integrates in v = -ln K2(X2), which is
// Exp(1)-distributed, so the (-ln K2)^(g-1) factor sits at v = 0.
// NonConvergence when either expectation diverges.
PrhExpectationTerms prh_expectation_terms(const DistributionModel& model2,
                                          const DistributionModel& base,
                                          PrhParameter eta,
                                          const WeightFunction& psi,
                                          FractionalOrder gamma);

// Terms at gamma, gamma+1, ..., gamma+count-1.
std::vector<PrhExpectationTerms> prh_term_ladder(
    const DistributionModel& base, PrhParameter eta, const WeightFunction& psi,
    FractionalOrder gamma, int count);

// CPE_g^psi(X2) = E(g) - E(g+1) - E~(g+1) / eta.
double prh_wfgcpe(const PrhExpectationTerms& at_gamma,
                  const PrhExpectationTerms& at_gamma_plus_1, PrhParameter eta);

// CPE_{g+1}^psi(X2) from prior = CPE_g^psi(X2) and the terms at g, g+1, g+2.
double prh_recurrence_step(std::span<const PrhExpectationTerms> terms,
                           PrhParameter eta, double prior);

// CPE_{g+n}^psi(X2) in closed n-step form from terms at g, ..., g+n+1.
double prh_n_step(int n, std::span<const PrhExpectationTerms> terms,
                  PrhParameter eta, double cpe_at_gamma);

}  // namespace wfgcpe

#endif  // WFGCPE_PRH_HPP_
