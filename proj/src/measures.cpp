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


#include "wfgcpe/measures.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "wfgcpe/errors.hpp"

namespace wfgcpe {
namespace {

using quad::Hint;

// psi-free kernel K (-ln K)^g / Gamma(g+1) from ln K, with 0 (-ln 0)^g = 0.
double past_kernel(double log_k, double gamma, double log_gamma1) {
  if (log_k == -quad::kInfinity || log_k >= 0.0) return 0.0;
  return std::exp(log_k + gamma * std::log(-log_k) - log_gamma1);
}

// (-ln K)^g / Gamma(g+1) from ln K.
double tau_kernel(double log_k, double gamma, double log_gamma1) {
  if (log_k >= 0.0) return 0.0;
  return std::exp(gamma * std::log(-log_k) - log_gamma1);
}

Hint upper_hint(const DistributionModel& model, Hint finite_hint) {
  return model.bounded() ? finite_hint : Hint::kDecayAtInfinity;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed_form";
    case Method::kQuadrature: return "quadrature";
    case Method::kDecomposition: return "decomposition";
  }
  return "unknown";
}

MeasureReport wfgcpe_quadrature(const DistributionModel& model,
                                const WeightFunction& psi,
                                FractionalOrder gamma) {
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  quad::Integrand f{
      [&](double x) {
        const double w = psi(x);
        if (w == 0.0) return 0.0;
        return w * past_kernel(model.log_cdf(x), g, lg);
      },
      model.lower(), model.upper(),
      Hint::kLogAtLo | upper_hint(model, Hint::kAlgebraicAtHi)};
  MeasureReport report;
  report.quadrature = quad::integrate(f);
  report.value = report.quadrature.value;
  report.method = Method::kQuadrature;
  return report;
}

MeasureReport wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                     FractionalOrder gamma) {
  if (auto closed = model.closed_form_wfgcpe(psi.tag(), gamma.value())) {
    MeasureReport report;
    report.value = *closed;
    report.method = Method::kClosedForm;
    report.quadrature.converged = true;
    return report;
  }
  return wfgcpe_quadrature(model, psi, gamma);
}

double wfgcpe_gamma_zero_limit(const DistributionModel& model,
                               const WeightFunction& psi) {
  if (!model.bounded()) {
    throw UnboundedSupport("gamma -> 0+ limit is +infinity on unbounded support");
  }
  const double big_psi_s = psi.antiderivative(model.upper());
  return big_psi_s -
         expectation(model, [&psi](double x) { return psi.antiderivative(x); });
}

double weighted_cpe(const DistributionModel& model, const WeightFunction& psi) {
  return wfgcpe_quadrature(model, psi, FractionalOrder(1.0)).value;
}

MeasureReport normalized_wfgcpe(const DistributionModel& model,
                                const WeightFunction& psi,
                                FractionalOrder gamma) {
  if (auto closed = model.closed_form_normalized(psi.tag(), gamma.value())) {
    MeasureReport report;
    report.value = *closed;
    report.method = Method::kClosedForm;
    report.quadrature.converged = true;
    return report;
  }
  const double g = gamma.value();
  const double normalizer = weighted_cpe(model, psi);
  if (!(normalizer > 0.0) || !std::isfinite(normalizer)) {
    throw DegenerateNormalizer("weighted cumulative past entropy is zero");
  }
  MeasureReport report = wfgcpe_quadrature(model, psi, gamma);
  report.value = std::exp(std::log(report.value) - quad::log_gamma(g + 1.0) -
                          g * std::log(normalizer));
  return report;
}

double dynamic_wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                      FractionalOrder gamma, double t) {
  if (!(t > model.lower()) || !(t <= model.upper()) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "inspection time t = " << t << " outside (" << model.lower() << ", "
       << model.upper() << ")";
    throw DomainError(os.str());
  }
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  const double log_kt = model.log_cdf(t);
  return quad::integrate(
             quad::Integrand{
                 [&](double x) {
                   const double w = psi(x);
                   if (w == 0.0) return 0.0;
                   return w * past_kernel(model.log_cdf(x) - log_kt, g, lg);
                 },
                 model.lower(), t, Hint::kLogAtLo | Hint::kAlgebraicAtHi})
      .value;
}

double tau(const DistributionModel& model, const WeightFunction& psi,
           FractionalOrder gamma, double u) {
  if (!(u >= model.lower()) || std::isnan(u)) {
    throw DomainError("tau requires u inside the support");
  }
  if (u >= model.upper()) return 0.0;
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  Hint hints = upper_hint(model, Hint::kAlgebraicAtHi);
  if (u == model.lower()) hints = hints | Hint::kLogAtLo;
  return quad::integrate(quad::Integrand{[&](double x) {
                                           const double w = psi(x);
                                           if (w == 0.0) return 0.0;
                                           return w * tau_kernel(
                                                          model.log_cdf(x), g,
                                                          lg);
                                         },
                                         u, model.upper(), hints},
                         quad::Tolerance{1e-12, 1e-11})
      .value;
}

double tau_derivative(const DistributionModel& model, const WeightFunction& psi,
                      FractionalOrder gamma, double u) {
  if (u >= model.upper()) return 0.0;
  const double g = gamma.value();
  return -psi(u) * tau_kernel(model.log_cdf(u), g, quad::log_gamma(g + 1.0));
}

double expected_tau(const DistributionModel& model, const WeightFunction& psi,
                    FractionalOrder gamma) {
  return quad::integral(
      [&](double p) { return tau(model, psi, gamma, model.quantile(p)); }, 0.0,
      1.0, Hint::kAlgebraicAtLo | Hint::kAlgebraicAtHi);
}

double wfgcre(const DistributionModel& model, const WeightFunction& psi,
              FractionalOrder gamma) {
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  return quad::integrate(
             quad::Integrand{
                 [&](double x) {
                   const double w = psi(x);
                   if (w == 0.0) return 0.0;
                   return w * past_kernel(model.log_survival(x), g, lg);
                 },
                 model.lower(), model.upper(),
                 Hint::kAlgebraicAtLo | upper_hint(model, Hint::kLogAtHi)})
      .value;
}

double affine_wfgcpe(const DistributionModel& model, const WeightFunction& psi,
                     FractionalOrder gamma, double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0)) {
    throw DomainError("affine map needs a > 0 and b >= 0");
  }
  const double g = gamma.value();
  const double lg = quad::log_gamma(g + 1.0);
  return a * quad::integrate(
                 quad::Integrand{
                     [&](double x) {
                       const double w = psi(a * x + b);
                       if (w == 0.0) return 0.0;
                       return w * past_kernel(model.log_cdf(x), g, lg);
                     },
                     model.lower(), model.upper(),
                     Hint::kLogAtLo | upper_hint(model, Hint::kAlgebraicAtHi)})
                 .value;
}

double rl_fractional_integral(const std::function<double(double)>& f,
                              const MonotoneFunction& h, double order, double a,
                              double t) {
  if (!(order > 0.0)) throw DomainError("fractional order must be positive");
  if (!(a < t) || !std::isfinite(t) || a < 0.0) {
    throw DomainError("Riemann-Liouville integral needs 0 <= a < t < inf");
  }
  constexpr int kProbes = 64;
  double prev = -quad::kInfinity;
  for (int i = 0; i < kProbes; ++i) {
    const double x = a + (t - a) * (i + 0.5) / kProbes;
    const double v = h.value(x);
    if (!(v > prev)) {
      std::ostringstream os;
      os << "h is not strictly increasing near x = " << x;
      throw MonotonicityError(os.str());
    }
    prev = v;
  }

  auto dh = [&h](double x) {
    if (h.derivative) return (*h.derivative)(x);
    const double step = std::max(1e-7, 1e-7 * std::abs(x));
    return (h.value(x + step) - h.value(x - step)) / (2.0 * step);
  };
  const double ht = h.value(t);
  const double dht = dh(t);
  const double exponent = order - 1.0;

  // Integrate in the distance d = t - s to keep the kernel singularity at a
  // well-resolved origin.
  auto integrand = [&](double d) {
    double s = t - d;
    if (s <= a) s = std::nextafter(a, t);
    const double w = dh(s) * f(s);
    if (w == 0.0) return 0.0;
    if (exponent == 0.0) return w;
    // Cancellation in h(t) - h(t - d) swamps the kernel for tiny d; the
    // midpoint slope is accurate there.
    double gap = d < 1e-6 * (t - a) ? dh(t - 0.5 * d) * d : ht - h.value(s);
    if (!(gap > 0.0)) gap = dht * d;
    return w * std::exp(exponent * std::log(gap));
  };
  Hint hints = Hint::kAlgebraicAtHi;
  if (exponent < 0.0) hints = hints | Hint::kAlgebraicAtLo;
  const double value =
      quad::integrate(quad::Integrand{integrand, 0.0, t - a, hints}).value;
  return value / quad::gamma_fn(order);
}

double fractional_bridge(const DistributionModel& model,
                         const WeightFunction& psi, FractionalOrder gamma) {
  if (!model.bounded()) {
    throw DomainError("fractional bridge needs a bounded support");
  }
  MonotoneFunction h{[&model](double x) { return model.log_cdf(x); },
                     [&model](double x) { return model.reversed_hazard(x); }};
  auto f = [&](double x) {
    const double k = model.pdf(x);
    const double kk = model.cdf(x);
    if (kk == 0.0) return 0.0;
    return psi(x) * kk * kk / k;
  };
  return rl_fractional_integral(f, h, gamma.value() + 1.0, model.lower(),
                                model.upper());
}

double discrete_wfe(const DiscreteDistribution& d, FractionalOrder alpha) {
  if (alpha.value() > 1.0) {
    throw DomainError("discrete fractional order must lie in (0, 1]");
  }
  const auto& p = d.probabilities;
  const auto& w = d.weights;
  if (p.size() != w.size() || p.empty()) {
    throw DomainError("probabilities and weights must have equal length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0) || !(w[i] >= 0.0)) {
      throw DomainError("probabilities must lie in [0,1], weights be >= 0");
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("probabilities must sum to 1");
  }
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0 || p[i] == 1.0) continue;
    h += w[i] * p[i] * std::pow(-std::log(p[i]), alpha.value());
  }
  return h;
}

}  // namespace wfgcpe
