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


#include "wfgcpe/tables.hpp"

#include <cmath>
#include <string>

#include "wfgcpe/analysis.hpp"
#include "wfgcpe/distribution.hpp"
#include "wfgcpe/errors.hpp"
#include "wfgcpe/measures.hpp"

namespace wfgcpe {
namespace {

struct Battery {
  std::string family;
  double b;
  double c;
  DistributionModel model;
};

std::vector<Battery> closed_form_battery() {
  return {{"power", 1, 2, make_power(1, 2)},
          {"power", 2, 3, make_power(2, 3)},
          {"frechet", 1, 4, make_frechet(1, 4)}};
}

constexpr double kBatteryGammas[] = {0.25, 0.5, 1.0, 1.5, 2.75};

template <typename Closed, typename Numeric>
ReportDocument closed_form_table(const char* verb, Closed closed,
                                 Numeric numeric) {
  ReportDocument doc(verb, {"family", "b", "c", "weight", "gamma", "closed_form",
                            "quadrature", "rel_diff", "status"});
  const WeightFunction weights[] = {WeightFunction::x(),
                                    WeightFunction::x_squared()};
  for (const auto& m : closed_form_battery()) {
    for (const auto& psi : weights) {
      for (double g : kBatteryGammas) {
        const FractionalOrder gamma(g);
        std::vector<Cell> row{m.family, m.b, m.c, psi.name(), g};
        try {
          const double cf = closed(m.model, psi, gamma);
          const double q = numeric(m.model, psi, gamma);
          row.insert(row.end(), {cf, q, std::abs(cf - q) / std::abs(cf),
                                 std::string("ok")});
        } catch (const ConstraintError& e) {
          row.insert(row.end(), {Cell{}, Cell{}, Cell{},
                                 std::string("constraint: ") + e.what()});
        }
        doc.add_row(std::move(row), "closed_form+quadrature");
      }
    }
  }
  return doc;
}

}  // namespace

ReportDocument table_closed_forms() {
  return closed_form_table(
      "reproduce",
      [](const DistributionModel& m, const WeightFunction& psi,
         FractionalOrder g) {
        auto v = m.closed_form_wfgcpe(psi.tag(), g);
        if (!v) throw Error("no closed form");
        return *v;
      },
      [](const DistributionModel& m, const WeightFunction& psi,
         FractionalOrder g) { return wfgcpe_quadrature(m, psi, g).value; });
}

ReportDocument table_normalized_closed_forms() {
  return closed_form_table(
      "reproduce",
      [](const DistributionModel& m, const WeightFunction& psi,
         FractionalOrder g) {
        auto v = m.closed_form_normalized(psi.tag(), g);
        if (!v) throw Error("no closed form");
        return *v;
      },
      [](const DistributionModel& m, const WeightFunction& psi,
         FractionalOrder g) {
        const double value = wfgcpe_quadrature(m, psi, g).value;
        const double norm = weighted_cpe(m, psi);
        return std::exp(std::log(value) - quad::log_gamma(g + 1.0) -
                        g * std::log(norm));
      });
}

const std::vector<Table3Reference>& blood_cancer_reference() {
  static const std::vector<Table3Reference> kRef = {
      {0.25, 24004.3, 881460, 1.27542e9},
      {0.5, 20065.8, 707724, 9.59358e8},
      {0.75, 16858.4, 570814, 7.23578e8},
      {1.5, 10279.3, 309581, 3.22149e8},
      {2.75, 4489.63, 114320, 8.89639e7},
  };
  return kRef;
}

ReportDocument table_blood_cancer(const std::vector<Reading>& readings) {
  ReportDocument doc("reproduce", {"reading", "gamma", "weight", "value",
                                   "reference", "rel_diff"});
  std::string matching;
  for (Reading reading : readings) {
    const EmpiricalSample sample = blood_cancer_43(reading);
    bool all_within = true;
    for (const auto& ref : blood_cancer_reference()) {
      const std::pair<WeightFunction, double> cells[] = {
          {WeightFunction::sqrt_x(), ref.sqrt_x},
          {WeightFunction::x(), ref.x},
          {WeightFunction::x_squared(), ref.x_squared}};
      for (const auto& [psi, expected] : cells) {
        const double v = empirical_wfgcpe(sample, psi, FractionalOrder(ref.gamma));
        const double rel = (v - expected) / expected;
        if (!(std::abs(rel) <= 0.01)) all_within = false;
        doc.add_row({std::string(to_string(reading)), ref.gamma, psi.name(), v,
                     expected, rel},
                    "empirical");
      }
    }
    if (all_within) {
      if (!matching.empty()) matching += ",";
      matching += to_string(reading);
    }
  }
  doc.add_metadata("dataset", std::string(kBloodCancerTag));
  doc.add_metadata("matching_readings", matching.empty() ? "none" : matching);
  return doc;
}

const std::vector<Table4Reference>& power_square_reference() {
  static const std::vector<Table4Reference> kRef = {
      {0.25, 5, 0.153878, 0.004609},  {0.25, 10, 0.181591, 0.003434},
      {0.25, 15, 0.191238, 0.002627}, {0.25, 30, 0.200941, 0.001507},
      {0.25, 50, 0.204774, 0.000956}, {0.5, 5, 0.135721, 0.003395},
      {0.5, 10, 0.156472, 0.002416},  {0.5, 15, 0.163420, 0.001822},
      {0.5, 30, 0.170268, 0.001034},  {0.5, 50, 0.172941, 0.000653},
      {0.75, 5, 0.116302, 0.002472},  {0.75, 10, 0.132732, 0.001734},
      {0.75, 15, 0.138160, 0.001304}, {0.75, 30, 0.143500, 0.000738},
      {0.75, 50, 0.145593, 0.000466}, {1.5, 5, 0.066611, 0.000968},
      {1.5, 10, 0.077849, 0.000712},  {1.5, 15, 0.081549, 0.000538},
      {1.5, 30, 0.085119, 0.000306},  {1.5, 50, 0.086481, 0.000194},
  };
  return kRef;
}

ReportDocument table_power_square_moments(std::size_t replicates,
                                          std::uint64_t seed) {
  std::vector<std::string> columns{"gamma",          "n",
                                   "mean",           "variance",
                                   "variance_joint", "reference_mean",
                                   "reference_variance"};
  if (replicates > 0) {
    columns.insert(columns.end(),
                   {"mc_mean", "mc_mean_se", "mc_variance", "mc_variance_se"});
  }
  ReportDocument doc("reproduce", columns);
  const DistributionModel population = make_power(1.0, 2.0);
  std::uint64_t cell = 0;
  for (const auto& ref : power_square_reference()) {
    const FractionalOrder gamma(ref.gamma);
    const auto per = exact_moments_power_square(ref.n, gamma);
    const auto joint =
        exact_moments_power_square(ref.n, gamma, VarianceForm::kJointSpacing);
    std::vector<Cell> row{ref.gamma,
                          static_cast<long long>(ref.n),
                          per.mean,
                          per.variance,
                          joint.variance,
                          ref.mean,
                          ref.variance};
    std::string method = "closed_form";
    if (replicates > 0) {
      SimulationConfig config{replicates, ref.n, seed + cell, population,
                              WeightFunction::x(), gamma};
      const auto sim = simulate_estimator(config);
      row.insert(row.end(), {sim.mean, sim.mean_se, sim.variance.value_or(NAN),
                             sim.variance_se.value_or(NAN)});
      method = "closed_form+simulation";
    }
    ++cell;
    doc.add_row(std::move(row), method);
  }
  if (replicates > 0) {
    doc.add_metadata("seed", static_cast<unsigned long long>(seed));
    doc.add_metadata("replicates", static_cast<long long>(replicates));
  }
  return doc;
}

}  // namespace wfgcpe
