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


#ifndef WFGCPE_ANALYSIS_HPP_
#define WFGCPE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wfgcpe/distribution.hpp"
#include "wfgcpe/empirical.hpp"
#include "wfgcpe/prh.hpp"
#include "wfgcpe/weight.hpp"

namespace wfgcpe {

// ---------------------------------------------------------------------------
// Stochastic orders. check_order(m1, m2, r) tests m1 <=_r m2.

enum class Relation { kSt, kHr, kDisp, kDcx };
std::string_view to_string(Relation relation);

enum class VerdictState { kHoldsOnGrid, kViolated, kInconclusive };
std::string_view to_string(VerdictState state);

struct OrderVerdict {
  Relation relation = Relation::kSt;
  VerdictState state = VerdictState::kInconclusive;
  std::size_t grid_size = 0;
  std::optional<double> witness_x;                        // st, hr, dcx
  std::optional<std::pair<double, double>> witness_uv;    // disp
  std::string note;

  bool holds() const { return state == VerdictState::kHoldsOnGrid; }
};

// st: K2 <= K1. hr: Kbar2/Kbar1 nondecreasing. disp: K2^-1 - K1^-1
// nondecreasing in u, which is the pairwise quantile-gap condition on the
// grid. dcx: E phi(X1) <= E phi(X2) for phi in {exp(-l x): l = 0.5, 1, 2}
// and the hinges (t - x)+ at grid points t; other convex functions are not
// examined. The x grid is the union of both models' quantiles at
// (i + 1/2)/grid. DomainError when grid < 64.
OrderVerdict check_order(const DistributionModel& m1,
                         const DistributionModel& m2, Relation relation,
                         std::size_t grid = 256);

// Log-convexity of the survival function on a 512-point quantile grid,
// slopes of ln Kbar nondecreasing within 1e-9.
bool is_dfr(const DistributionModel& model, std::size_t grid = 512);

// lhs <= rhs + 1e-9 style comparison report.
struct ComparisonReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  std::string detail;
};

// Asserts CPE(m1) <= CPE(m2) + 1e-9 when m1 <=_disp m2 and psi increases.
// PreconditionUnmet otherwise.
ComparisonReport dispersive_implies_wfgcpe_order(const DistributionModel& m1,
                                                 const DistributionModel& m2,
                                                 const WeightFunction& psi,
                                                 FractionalOrder gamma);

// Same conclusion from m1 <=_hr m2 with either model DFR. The argument goes
// through the dispersive order, so psi must increase as well.
ComparisonReport hr_dfr_implies_wfgcpe_order(const DistributionModel& m1,
                                             const DistributionModel& m2,
                                             const WeightFunction& psi,
                                             FractionalOrder gamma);

// CPE(X1) = E[tau1(X2)] + E[tau1'(V)] (E X1 - E X2) where tau1 is built from
// K1 and V has density (K1 - K2)/(E X2 - E X1).
struct MeanValueReport {
  double cpe1 = 0.0;
  double expected_tau_x2 = 0.0;
  double expected_tau_prime_v = 0.0;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double rhs = 0.0;
  double residual = 0.0;        // cpe1 - rhs
  bool lower_bound_holds = false;  // cpe1 >= E[tau1(X2)] - 1e-9
};

// PreconditionUnmet when m1 <=_st m2 fails or the means coincide.
MeanValueReport mean_value_identity(const DistributionModel& m1,
                                    const DistributionModel& m2,
                                    const WeightFunction& psi,
                                    FractionalOrder gamma);

// ---------------------------------------------------------------------------
// Bounds.

enum class BoundId {
  kOneMinusK,       // CPE >= 1/G int psi K (1-K)^g
  kEntropy,         // CPE >= D(g) e^H
  kEntropyGamma,    // Gamma(g+1) CPE >= D(g) e^H
  kMeanTau,         // CPE >= tau(mu), psi decreasing
  kMonotoneWeight,  // CPE vs psi(s) CPE_g(psi = 1)
  kPowerWeight,     // psi = xi^g against s^(1-g) [CPE^xi]^g / G
  kSum,             // CPE(X + Y) >= max(CPE(X), CPE(Y))
  kPrh,             // CPE(X2) vs eta^g CPE(X1)
};
std::string_view to_string(BoundId id);

struct BoundCheck {
  BoundId id = BoundId::kOneMinusK;
  bool applicable = false;
  std::string reason;      // why it was skipped
  std::string relation;    // ">=" or "<="
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;      // signed so that slack >= 0 means the bound holds
  bool holds() const { return !applicable || slack >= -1e-9; }
};

struct BoundSuiteReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const;
  const BoundCheck& get(BoundId id) const;
};

struct BoundOptions {
  // Auxiliary weight xi for the power-weight bound; psi itself when absent.
  std::optional<WeightFunction> xi;
  // Independent partner for the sum bound; an iid copy when absent.
  std::optional<DistributionModel> partner;
  std::size_t convolution_grid = 4096;
};

// Evaluates every bound whose hypotheses hold; the others are marked not
// applicable with a reason.
BoundSuiteReport bound_suite(const DistributionModel& model,
                             const WeightFunction& psi, FractionalOrder gamma,
                             const BoundOptions& options = {});

// K_S(z) = int_0^1 K1(z - K2^-1(u)) du on grid + 1 equally spaced points of
// [lower1 + lower2, upper1 + upper2]. Bounded supports only.
std::vector<std::pair<double, double>> convolution_cdf(
    const DistributionModel& m1, const DistributionModel& m2,
    std::size_t grid = 4096);

// WFGCPE of X1 + X2 from the convolution grid by the trapezoid rule.
double wfgcpe_of_sum(const DistributionModel& m1, const DistributionModel& m2,
                     const WeightFunction& psi, FractionalOrder gamma,
                     std::size_t grid = 4096);

// Log-concavity of the density on a quantile grid.
bool has_log_concave_density(const DistributionModel& model,
                             std::size_t grid = 512);

// CPE(X2) <= eta^g CPE(X1) for eta >= 1, >= for eta <= 1.
BoundCheck prh_bound(const DistributionModel& base, PrhParameter eta,
                     const WeightFunction& psi, FractionalOrder gamma);

// ---------------------------------------------------------------------------
// Sign change of CPE_g^x(X1) - CPE_g^x(X2) for K_i = x^{c_i}, c1 <= c2.

struct SignChangeReport {
  bool found = false;
  double c1 = 0.0;
  double c2 = 0.0;
  double difference_low = 0.0;   // at gamma_low
  double difference_high = 0.0;  // at gamma_high
  std::size_t pairs_scanned = 0;
};

SignChangeReport st_counterexample_scan(double gamma_low, double gamma_high,
                                        const std::vector<double>& c_grid);

// ---------------------------------------------------------------------------
// Monte Carlo.

struct SimulationConfig {
  std::size_t replicates = 1;
  std::size_t sample_size = 2;
  std::uint64_t seed = 0;
  DistributionModel population;
  WeightFunction weight;
  FractionalOrder gamma{1.0};
  // 0 means hardware concurrency, further capped by WFGCPE_THREADS.
  unsigned threads = 0;
};

struct SimulationSummary {
  std::vector<double> values;  // in replicate order
  double mean = 0.0;
  double mean_se = 0.0;
  // Unbiased sample variance; absent for a single replicate.
  std::optional<double> variance;
  // Standard error of the variance from the fourth central moment.
  std::optional<double> variance_se;
};

// Replicate i draws its sample by inverse transform from a generator seeded
// with (seed, i), so the output does not depend on the number of threads.
SimulationSummary simulate_estimator(const SimulationConfig& config);

// i-th uniform stream used by simulate_estimator.
std::vector<double> replicate_uniforms(std::uint64_t seed, std::uint64_t index,
                                       std::size_t count);

unsigned worker_count(unsigned requested);

enum class CltVerdict { kPass, kFail, kReportOnly };
std::string_view to_string(CltVerdict verdict);

struct CltReport {
  double ks_distance = 0.0;
  double threshold = 0.0;  // 1.5 * 1.36 / sqrt(replicates)
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double mean_used = 0.0;
  double sd_used = 0.0;
  std::string moments_source;  // "exact" or "monte_carlo"
  CltVerdict verdict = CltVerdict::kReportOnly;
};

// Kolmogorov-Smirnov distance of the standardized replicates to N(0, 1).
// A verdict is issued only for sample sizes of at least 200.
// PreconditionUnmet for a nonpositive variance.
CltReport clt_diagnostic(const SimulationConfig& config,
                         std::optional<SamplingMoments> exact);

double ks_distance_to_normal(std::vector<double> z);

struct ConsistencyReport {
  double target = 0.0;
  std::vector<std::size_t> sizes;
  std::vector<double> median_abs_error;
  bool monotone_decreasing = false;
};

// Median |estimate - target| over the replicates at each sample size.
ConsistencyReport consistency_check(const DistributionModel& population,
                                    const WeightFunction& psi,
                                    FractionalOrder gamma, double target,
                                    const std::vector<std::size_t>& sizes,
                                    std::size_t replicates, std::uint64_t seed);

}  // namespace wfgcpe

#endif  // WFGCPE_ANALYSIS_HPP_
