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


#ifndef WFGCPE_TABLES_HPP_
#define WFGCPE_TABLES_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wfgcpe/empirical.hpp"
#include "wfgcpe/report.hpp"

namespace wfgcpe {

// Closed form against quadrature for power (1,2), (2,3) and Frechet (1,4),
// psi in {x, x^2}, gamma in {0.25, 0.5, 1, 1.5, 2.75}. Rows whose gamma is
// at or below the Frechet divergence threshold are reported as such.
ReportDocument table_closed_forms();

// The same battery for the normalized measure.
ReportDocument table_normalized_closed_forms();

// Empirical estimates on the blood cancer sample for psi in {sqrt x, x, x^2}
// and gamma in {0.25, 0.5, 0.75, 1.5, 2.75}, with the relative deviation
// from the reference values. Metadata "matching_readings" lists the readings
// whose 15 cells all lie within 1%.
ReportDocument table_blood_cancer(const std::vector<Reading>& readings);

struct Table3Reference {
  double gamma;
  double sqrt_x;
  double x;
  double x_squared;
};
const std::vector<Table3Reference>& blood_cancer_reference();

// Exact mean and variance of the estimator for K(x) = x^2, psi = x, with
// the reference cells alongside; with replicates > 0 also Monte Carlo
// moments from the given seed.
ReportDocument table_power_square_moments(std::size_t replicates,
                                          std::uint64_t seed);

struct Table4Reference {
  double gamma;
  std::size_t n;
  double mean;
  double variance;
};
const std::vector<Table4Reference>& power_square_reference();

}  // namespace wfgcpe

#endif  // WFGCPE_TABLES_HPP_
