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


#include "wfgcpe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "wfgcpe/errors.hpp"
#include "wfgcpe/measures.hpp"
#include "wfgcpe/quadrature.hpp"

namespace wfgcpe {
namespace {

using quad::Hint;

constexpr double kOrderTol = 1e-9;

std::vector<double> quantile_grid(const DistributionModel& m, std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = m.quantile((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  }
  return xs;
}

std::vector<double> union_grid(const DistributionModel& m1,
                               const DistributionModel& m2, std::size_t n) {
  std::vector<double> xs = quantile_grid(m1, n);
  const std::vector<double> b = quantile_grid(m2, n);
  xs.insert(xs.end(), b.begin(), b.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool below(double next, double prev) {
  return next < prev - kOrderTol * (1.0 + std::abs(prev));
}

OrderVerdict check_st(const DistributionModel& m1, const DistributionModel& m2,
                      const std::vector<double>& xs) {
  OrderVerdict v;
  for (double x : xs) {
    if (m2.cdf(x) > m1.cdf(x) + 1e-12) {
      v.state = VerdictState::kViolated;
      v.witness_x = x;
      return v;
    }
  }
  v.state = VerdictState::kHoldsOnGrid;
  return v;
}

OrderVerdict check_hr(const DistributionModel& m1, const DistributionModel& m2,
                      const std::vector<double>& xs) {
  OrderVerdict v;
  std::optional<double> prev;
  std::size_t compared = 0;
  for (double x : xs) {
    const double ls1 = m1.log_survival(x);
    const double ls2 = m2.log_survival(x);
    if (ls1 == -quad::kInfinity) break;  // ratio is +inf from here on
    const double r = ls2 - ls1;          // ln(Kbar2 / Kbar1)
    if (prev && (r == -quad::kInfinity || below(r, *prev))) {
      v.state = VerdictState::kViolated;
      v.witness_x = x;
      return v;
    }
    prev = r;
    ++compared;
  }
  if (compared < 2) {
    v.note = "survival functions have no common positive region";
    return v;
  }
  v.state = VerdictState::kHoldsOnGrid;
  return v;
}

OrderVerdict check_disp(const DistributionModel& m1,
                        const DistributionModel& m2, std::size_t n) {
  OrderVerdict v;
  double prev_u = 0.0, prev_d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    const double d = m2.quantile(u) - m1.quantile(u);
    if (i > 0 && below(d, prev_d)) {
      v.state = VerdictState::kViolated;
      v.witness_uv = std::make_pair(prev_u, u);
      return v;
    }
    prev_u = u;
    prev_d = d;
  }
  v.state = VerdictState::kHoldsOnGrid;
  return v;
}

// E (t - X)+ = int_lower^t K(x) dx.
double hinge_expectation(const DistributionModel& m, double t) {
  if (t <= m.lower()) return 0.0;
  const double hi = std::min(t, m.upper());
  double value = quad::integral([&m](double x) { return m.cdf(x); }, m.lower(),
                                hi, Hint::kLogAtLo);
  if (t > hi) value += t - hi;
  return value;
}

OrderVerdict check_dcx(const DistributionModel& m1, const DistributionModel& m2,
                       const std::vector<double>& xs) {
  OrderVerdict v;
  for (double lambda : {0.5, 1.0, 2.0}) {
    auto phi = [lambda](double x) { return std::exp(-lambda * x); };
    const double e1 = expectation(m1, phi);
    const double e2 = expectation(m2, phi);
    if (e1 > e2 + kOrderTol * (1.0 + std::abs(e2))) {
      v.state = VerdictState::kViolated;
      std::ostringstream os;
      os << "exp(-" << lambda << " x) test function";
      v.note = os.str();
      return v;
    }
  }
  for (double t : xs) {
    const double e1 = hinge_expectation(m1, t);
    const double e2 = hinge_expectation(m2, t);
    if (e1 > e2 + kOrderTol * (1.0 + std::abs(e2))) {
      v.state = VerdictState::kViolated;
      v.witness_x = t;
      v.note = "hinge (t - x)+ test function";
      return v;
    }
  }
  v.state = VerdictState::kHoldsOnGrid;
  v.note = "checked on exp(-l x), l in {0.5, 1, 2}, and hinges at grid points";
  return v;
}

// Slopes of f over xs are nondecreasing (convex) or nonincreasing (concave).
bool slopes_monotone(const std::vector<double>& xs,
                     const std::function<double(double)>& f, bool convex) {
  std::optional<double> prev_slope;
  double prev_x = xs.front();
  double prev_f = f(prev_x);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > prev_x)) continue;
    const double fx = f(xs[i]);
    if (!std::isfinite(fx) || !std::isfinite(prev_f)) return false;
    const double slope = (fx - prev_f) / (xs[i] - prev_x);
    if (prev_slope) {
      const double tol = kOrderTol * (1.0 + std::abs(*prev_slope));
      if (convex ? slope < *prev_slope - tol : slope > *prev_slope + tol) {
        return false;
      }
    }
    prev_slope = slope;
    prev_x = xs[i];
    prev_f = fx;
  }
  return true;
}

double cpe(const DistributionModel& m, const WeightFunction& psi,
           FractionalOrder gamma) {
  return wfgcpe_quadrature(m, psi, gamma).value;
}

BoundCheck skipped(BoundId id, std::string reason) {
  BoundCheck b;
  b.id = id;
  b.applicable = false;
  b.reason = std::move(reason);
  return b;
}

BoundCheck compared(BoundId id, double lhs, double rhs, bool at_least) {
  BoundCheck b;
  b.id = id;
  b.applicable = true;
  b.relation = at_least ? ">=" : "<=";
  b.lhs = lhs;
  b.rhs = rhs;
  b.slack = at_least ? lhs - rhs : rhs - lhs;
  return b;
}

// D(g) = exp(int_0^1 ln[psi(K^-1(u)) u (-ln u)^g] du).
double entropy_bound_factor(const DistributionModel& model,
                            const WeightFunction& psi, double g) {
  bool vanishes = false;
  const double log_d = quad::integral(
      [&](double u) {
        const double w = psi(model.quantile(u));
        if (!(w > 0.0)) {
          vanishes = true;
          return 0.0;
        }
        return std::log(w) + std::log(u) + g * std::log(-std::log(u));
      },
      0.0, 1.0, Hint::kLogAtLo | Hint::kLogAtHi);
  return vanishes ? 0.0 : std::exp(log_d);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  return seed + 0x9E3779B97F4A7C15ull * (k + 1);
}

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid),
                   v.end());
  const double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(),
                                      v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::kSt: return "st";
    case Relation::kHr: return "hr";
    case Relation::kDisp: return "disp";
    case Relation::kDcx: return "dcx";
  }
  return "unknown";
}

std::string_view to_string(VerdictState state) {
  switch (state) {
    case VerdictState::kHoldsOnGrid: return "holds_on_grid";
    case VerdictState::kViolated: return "violated";
    case VerdictState::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

OrderVerdict check_order(const DistributionModel& m1,
                         const DistributionModel& m2, Relation relation,
                         std::size_t grid) {
  if (grid < 64) throw DomainError("order checks need a grid of at least 64");
  OrderVerdict v;
  switch (relation) {
    case Relation::kSt: v = check_st(m1, m2, union_grid(m1, m2, grid)); break;
    case Relation::kHr: v = check_hr(m1, m2, union_grid(m1, m2, grid)); break;
    case Relation::kDisp: v = check_disp(m1, m2, grid); break;
    case Relation::kDcx: v = check_dcx(m1, m2, union_grid(m1, m2, grid)); break;
  }
  v.relation = relation;
  v.grid_size = grid;
  return v;
}

bool is_dfr(const DistributionModel& model, std::size_t grid) {
  return slopes_monotone(
      quantile_grid(model, grid),
      [&model](double x) { return model.log_survival(x); }, true);
}

bool has_log_concave_density(const DistributionModel& model, std::size_t grid) {
  return slopes_monotone(
      quantile_grid(model, grid),
      [&model](double x) { return std::log(model.pdf(x)); }, false);
}

ComparisonReport dispersive_implies_wfgcpe_order(const DistributionModel& m1,
                                                 const DistributionModel& m2,
                                                 const WeightFunction& psi,
                                                 FractionalOrder gamma) {
  if (!psi.is_increasing()) {
    throw PreconditionUnmet("dispersive implication needs an increasing psi");
  }
  const OrderVerdict disp = check_order(m1, m2, Relation::kDisp);
  if (!disp.holds()) {
    throw PreconditionUnmet("m1 <=_disp m2 fails on the quantile grid");
  }
  ComparisonReport r;
  r.lhs = wfgcpe(m1, psi, gamma).value;
  r.rhs = wfgcpe(m2, psi, gamma).value;
  r.holds = r.lhs <= r.rhs + 1e-9;
  r.detail = "disp holds on grid; CPE(X1) <= CPE(X2)";
  return r;
}

ComparisonReport hr_dfr_implies_wfgcpe_order(const DistributionModel& m1,
                                             const DistributionModel& m2,
                                             const WeightFunction& psi,
                                             FractionalOrder gamma) {
  if (!psi.is_increasing()) {
    throw PreconditionUnmet("hr + DFR implication needs an increasing psi");
  }
  if (!check_order(m1, m2, Relation::kHr).holds()) {
    throw PreconditionUnmet("m1 <=_hr m2 fails on the grid");
  }
  const bool dfr1 = is_dfr(m1);
  const bool dfr2 = !dfr1 && is_dfr(m2);
  if (!dfr1 && !dfr2) throw PreconditionUnmet("neither model is DFR");
  ComparisonReport r;
  r.lhs = wfgcpe(m1, psi, gamma).value;
  r.rhs = wfgcpe(m2, psi, gamma).value;
  r.holds = r.lhs <= r.rhs + 1e-9;
  r.detail = dfr1 ? "hr holds, X1 is DFR" : "hr holds, X2 is DFR";
  return r;
}

MeanValueReport mean_value_identity(const DistributionModel& m1,
                                    const DistributionModel& m2,
                                    const WeightFunction& psi,
                                    FractionalOrder gamma) {
  if (!check_order(m1, m2, Relation::kSt).holds()) {
    throw PreconditionUnmet("mean value identity needs X1 <=_st X2");
  }
  MeanValueReport r;
  r.mean1 = mean(m1);
  r.mean2 = mean(m2);
  const double gap = r.mean2 - r.mean1;
  if (!(std::abs(gap) > 1e-12 * (1.0 + std::abs(r.mean1)))) {
    throw PreconditionUnmet("mean value identity needs unequal means");
  }
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  r.cpe1 = wfgcpe(m1, psi, gamma).value;
  r.expected_tau_x2 = quad::integral(
      [&](double p) { return tau(m1, psi, gamma, m2.quantile(p)); }, 0.0, 1.0,
      Hint::kAlgebraicAtLo | Hint::kAlgebraicAtHi);

  // tau1'(x) k_V(x) vanishes once K1 = 1.
  const double hi = std::min(m1.upper(), m2.upper());
  const Hint hints = Hint::kLogAtLo | (std::isfinite(hi) ? Hint::kAlgebraicAtHi
                                                         : Hint::kDecayAtInfinity);
  r.expected_tau_prime_v =
      quad::integral(
          [&](double x) {
            const double log_k1 = m1.log_cdf(x);
            if (log_k1 >= 0.0 || log_k1 == -quad::kInfinity) return 0.0;
            const double w = psi(x);
            if (w == 0.0) return 0.0;
            const double density = m1.cdf(x) - m2.cdf(x);
            return -w * std::exp(g * std::log(-log_k1) - lg) * density;
          },
          m1.lower(), hi, hints) /
      gap;
  r.rhs = r.expected_tau_x2 + r.expected_tau_prime_v * (r.mean1 - r.mean2);
  r.residual = r.cpe1 - r.rhs;
  r.lower_bound_holds = r.cpe1 >= r.expected_tau_x2 - 1e-9;
  return r;
}

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::kOneMinusK: return "one_minus_k";
    case BoundId::kEntropy: return "entropy_exp";
    case BoundId::kEntropyGamma: return "entropy_exp_gamma";
    case BoundId::kMeanTau: return "tau_at_mean";
    case BoundId::kMonotoneWeight: return "monotone_weight";
    case BoundId::kPowerWeight: return "power_weight";
    case BoundId::kSum: return "sum_of_independents";
    case BoundId::kPrh: return "prh";
  }
  return "unknown";
}

bool BoundSuiteReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& b) { return b.holds(); });
}

const BoundCheck& BoundSuiteReport::get(BoundId id) const {
  for (const auto& b : checks) {
    if (b.id == id) return b;
  }
  throw DomainError("bound not present in report");
}

std::vector<std::pair<double, double>> convolution_cdf(
    const DistributionModel& m1, const DistributionModel& m2,
    std::size_t grid) {
  if (!m1.bounded() || !m2.bounded()) {
    throw DomainError("convolution grid needs bounded supports");
  }
  if (grid < 2) throw DomainError("convolution grid needs at least 2 cells");
  const double lo = m1.lower() + m2.lower();
  const double hi = m1.upper() + m2.upper();
  std::vector<std::pair<double, double>> out(grid + 1);
  for (std::size_t j = 0; j <= grid; ++j) {
    const double z =
        lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(grid);
    double k;
    if (j == 0) {
      k = 0.0;
    } else if (j == grid) {
      k = 1.0;
    } else {
      // K1(z - K2^-1(u)) is 1 for u <= u1 and 0 for u >= u2; integrating
      // across those kinks lets Gauss-Kronrod report false convergence.
      const double u1 = m2.cdf(z - m1.upper());
      const double u2 = m2.cdf(z - m1.lower());
      k = u1;
      if (u2 > u1) {
        k += quad::integral(
            [&](double u) { return m1.cdf(z - m2.quantile(u)); }, u1, u2,
            Hint::kAlgebraicAtLo | Hint::kAlgebraicAtHi);
      }
      k = std::clamp(k, 0.0, 1.0);
    }
    out[j] = {z, k};
  }
  return out;
}

double wfgcpe_of_sum(const DistributionModel& m1, const DistributionModel& m2,
                     const WeightFunction& psi, FractionalOrder gamma,
                     std::size_t grid) {
  const auto table = convolution_cdf(m1, m2, grid);
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  auto f = [&](double z, double k) {
    if (k <= 0.0 || k >= 1.0) return 0.0;
    return psi(z) * std::exp(std::log(k) + g * std::log(-std::log(k)) - lg);
  };
  double total = 0.0;
  for (std::size_t j = 1; j < table.size(); ++j) {
    const auto [z0, k0] = table[j - 1];
    const auto [z1, k1] = table[j];
    total += 0.5 * (z1 - z0) * (f(z0, k0) + f(z1, k1));
  }
  return total;
}

BoundCheck prh_bound(const DistributionModel& base, PrhParameter eta,
                     const WeightFunction& psi, FractionalOrder gamma) {
  const double lhs = cpe(prh_transform(base, eta), psi, gamma);
  const double rhs = std::pow(eta.value(), gamma.value()) * cpe(base, psi, gamma);
  return compared(BoundId::kPrh, lhs, rhs, eta.value() < 1.0);
}

BoundSuiteReport bound_suite(const DistributionModel& model,
                             const WeightFunction& psi, FractionalOrder gamma,
                             const BoundOptions& options) {
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  const double value = cpe(model, psi, gamma);
  BoundSuiteReport report;
  auto& out = report.checks;

  {
    const double rhs = quad::integral(
        [&](double x) {
          const double k = model.cdf(x);
          const double w = psi(x);
          if (w == 0.0 || k == 0.0) return 0.0;
          return w * k * std::exp(g * std::log1p(-k) - lg);
        },
        model.lower(), model.upper(),
        model.bounded() ? Hint::kAlgebraicAtHi : Hint::kDecayAtInfinity);
    out.push_back(compared(BoundId::kOneMinusK, value, rhs, true));
  }

  {
    const double d = entropy_bound_factor(model, psi, g);
    const double rhs = d * std::exp(differential_entropy(model));
    out.push_back(compared(BoundId::kEntropy, value, rhs, true));
    out.push_back(
        compared(BoundId::kEntropyGamma, std::exp(lg) * value, rhs, true));
  }

  if (!psi.is_decreasing()) {
    out.push_back(skipped(BoundId::kMeanTau, "psi is not decreasing"));
  } else {
    try {
      const double rhs = tau(model, psi, gamma, mean(model));
      out.push_back(compared(BoundId::kMeanTau, value, rhs, true));
    } catch (const NonConvergence&) {
      out.push_back(skipped(BoundId::kMeanTau, "tau(mean) does not converge"));
    }
  }

  const double s = model.upper();
  if (!model.bounded()) {
    out.push_back(skipped(BoundId::kMonotoneWeight, "unbounded support"));
  } else if (psi.monotonicity() == Monotonicity::kNeither) {
    out.push_back(skipped(BoundId::kMonotoneWeight, "psi is not monotone"));
  } else {
    const double rhs = psi(s) * cpe(model, WeightFunction::one(), gamma);
    out.push_back(compared(BoundId::kMonotoneWeight, value, rhs,
                           psi.is_decreasing()));
  }

  if (!model.bounded()) {
    out.push_back(skipped(BoundId::kPowerWeight, "unbounded support"));
  } else {
    const WeightFunction xi = options.xi ? *options.xi : psi;
    const WeightFunction xi_pow = WeightFunction::custom(
        "(" + xi.name() + ")^g", [xi, g](double x) { return std::pow(xi(x), g); });
    const double lhs = cpe(model, xi_pow, gamma);
    const double rhs = std::pow(s, 1.0 - g) *
                       std::pow(weighted_cpe(model, xi), g) / std::exp(lg);
    out.push_back(compared(BoundId::kPowerWeight, lhs, rhs, g >= 1.0));
  }

  const DistributionModel partner = options.partner ? *options.partner : model;
  if (!model.bounded() || !partner.bounded()) {
    out.push_back(skipped(BoundId::kSum, "unbounded support"));
  } else if (!psi.is_increasing()) {
    out.push_back(skipped(BoundId::kSum, "psi is not increasing"));
  } else if (!has_log_concave_density(model) ||
             !has_log_concave_density(partner)) {
    out.push_back(skipped(BoundId::kSum, "density is not log-concave"));
  } else {
    const double lhs =
        wfgcpe_of_sum(model, partner, psi, gamma, options.convolution_grid);
    const double rhs = std::max(value, cpe(partner, psi, gamma));
    out.push_back(compared(BoundId::kSum, lhs, rhs, true));
  }
  return report;
}

SignChangeReport st_counterexample_scan(double gamma_low, double gamma_high,
                                        const std::vector<double>& c_grid) {
  SignChangeReport r;
  const WeightFunction psi = WeightFunction::x();
  const FractionalOrder lo(gamma_low), hi(gamma_high);
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    for (std::size_t j = 0; j < c_grid.size(); ++j) {
      const double c1 = c_grid[i], c2 = c_grid[j];
      if (!(c1 < c2)) continue;
      ++r.pairs_scanned;
      const DistributionModel m1 = make_power(1.0, c1);
      const DistributionModel m2 = make_power(1.0, c2);
      const double d_lo = wfgcpe(m1, psi, lo).value - wfgcpe(m2, psi, lo).value;
      const double d_hi = wfgcpe(m1, psi, hi).value - wfgcpe(m2, psi, hi).value;
      if (!r.found && d_lo * d_hi < 0.0) {
        r.found = true;
        r.c1 = c1;
        r.c2 = c2;
        r.difference_low = d_lo;
        r.difference_high = d_hi;
      }
    }
  }
  return r;
}

std::vector<double> replicate_uniforms(std::uint64_t seed, std::uint64_t index,
                                       std::size_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  std::vector<double> u(count);
  for (double& v : u) {
    // Midpoints of a 2^-53 lattice: strictly inside (0, 1).
    v = (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
  }
  return u;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("WFGCPE_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) {
      n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
  }
  return n;
}

SimulationSummary simulate_estimator(const SimulationConfig& config) {
  if (config.replicates < 1) throw DomainError("replicates must be >= 1");
  if (config.sample_size < 2) throw DomainError("sample size must be >= 2");
  if (!config.weight.has_antiderivative()) {
    throw WeightAntiderivativeUnavailable(
        "simulation needs a weight with an antiderivative");
  }
  const std::size_t reps = config.replicates;
  SimulationSummary out;
  out.values.assign(reps, 0.0);

  auto run_one = [&config](std::size_t i) {
    std::vector<double> u =
        replicate_uniforms(config.seed, i, config.sample_size);
    for (double& v : u) v = config.population.quantile(v);
    return empirical_wfgcpe(EmpiricalSample(std::move(u), "simulation"),
                            config.weight, config.gamma);
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(config.threads), reps));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < reps; i += workers) out.values[i] = run_one(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const double r = static_cast<double>(reps);
  out.mean = std::accumulate(out.values.begin(), out.values.end(), 0.0) / r;
  if (reps >= 2) {
    double m2 = 0.0, m4 = 0.0;
    for (double v : out.values) {
      const double d = (v - out.mean) * (v - out.mean);
      m2 += d;
      m4 += d * d;
    }
    const double var = m2 / (r - 1.0);
    m4 /= r;
    out.variance = var;
    out.mean_se = std::sqrt(var / r);
    const double var_of_var = (m4 - (r - 3.0) / (r - 1.0) * var * var) / r;
    out.variance_se = std::sqrt(std::max(var_of_var, 0.0));
  }
  return out;
}

std::string_view to_string(CltVerdict verdict) {
  switch (verdict) {
    case CltVerdict::kPass: return "pass";
    case CltVerdict::kFail: return "fail";
    case CltVerdict::kReportOnly: return "report_only";
  }
  return "unknown";
}

double ks_distance_to_normal(std::vector<double> z) {
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double phi = 0.5 * std::erfc(-z[i] / std::sqrt(2.0));
    const double i1 = static_cast<double>(i);
    d = std::max({d, (i1 + 1.0) / n - phi, phi - i1 / n});
  }
  return d;
}

CltReport clt_diagnostic(const SimulationConfig& config,
                         std::optional<SamplingMoments> exact) {
  const SimulationSummary sim = simulate_estimator(config);
  CltReport r;
  if (exact) {
    r.mean_used = exact->mean;
    r.sd_used = std::sqrt(std::max(exact->variance, 0.0));
    r.moments_source = "exact";
  } else {
    r.mean_used = sim.mean;
    r.sd_used = std::sqrt(sim.variance.value_or(0.0));
    r.moments_source = "monte_carlo";
  }
  if (!(r.sd_used > 0.0)) {
    throw PreconditionUnmet("estimator variance is zero or undefined");
  }
  std::vector<double> z(sim.values.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = (sim.values[i] - r.mean_used) / r.sd_used;
  }
  const double n = static_cast<double>(z.size());
  const double zbar = std::accumulate(z.begin(), z.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : z) {
    const double d = v - zbar;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  r.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  r.excess_kurtosis = m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  r.ks_distance = ks_distance_to_normal(std::move(z));
  r.threshold = 1.5 * 1.36 / std::sqrt(n);
  if (config.sample_size >= 200) {
    r.verdict = r.ks_distance < r.threshold ? CltVerdict::kPass : CltVerdict::kFail;
  }
  return r;
}

ConsistencyReport consistency_check(const DistributionModel& population,
                                    const WeightFunction& psi,
                                    FractionalOrder gamma, double target,
                                    const std::vector<std::size_t>& sizes,
                                    std::size_t replicates, std::uint64_t seed) {
  ConsistencyReport r;
  r.target = target;
  r.sizes = sizes;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    SimulationConfig config{replicates, sizes[k], mix_seed(seed, k), population,
                            psi, gamma};
    const SimulationSummary sim = simulate_estimator(config);
    std::vector<double> err(sim.values.size());
    for (std::size_t i = 0; i < err.size(); ++i) {
      err[i] = std::abs(sim.values[i] - target);
    }
    r.median_abs_error.push_back(median(std::move(err)));
  }
  r.monotone_decreasing = true;
  for (std::size_t k = 1; k < r.median_abs_error.size(); ++k) {
    if (!(r.median_abs_error[k] < r.median_abs_error[k - 1])) {
      r.monotone_decreasing = false;
    }
  }
  return r;
}

}  // namespace wfgcpe
