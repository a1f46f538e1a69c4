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


#include "wfgcpe/prh.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "wfgcpe/errors.hpp"
#include "wfgcpe/quadrature.hpp"

namespace wfgcpe {

PrhParameter::PrhParameter(double eta) : eta_(eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw DomainError("PRH constant eta must be a finite positive real");
  }
}

DistributionModel prh_transform(const DistributionModel& base,
                                PrhParameter eta_param) {
  const double eta = eta_param.value();
  DistributionModel::Spec s;
  s.name = "prh(" + base.name() + ")";
  s.family = Family::kPrh;
  s.parameters = base.parameters();
  s.parameters.emplace_back("eta", eta);
  s.lower = base.lower();
  s.upper = base.upper();
  s.log_cdf = [base, eta](double x) { return eta * base.log_cdf(x); };
  s.cdf = [base, eta](double x) { return std::exp(eta * base.log_cdf(x)); };
  s.log_survival = [base, eta](double x) {
    return std::log(-std::expm1(eta * base.log_cdf(x)));
  };
  s.pdf = [base, eta](double x) {
    const double k1 = base.pdf(x);
    if (k1 == 0.0) return 0.0;
    return eta * std::exp((eta - 1.0) * base.log_cdf(x)) * k1;
  };
  s.quantile = [base, eta](double u) {
    return base.quantile_from_log(std::log(u) / eta);
  };
  s.log_quantile = [base, eta](double l) {
    return base.quantile_from_log(l / eta);
  };
  return DistributionModel(std::move(s));
}

PrhExpectationTerms prh_expectation_terms(const DistributionModel& model2,
                                          const DistributionModel& base,
                                          PrhParameter eta,
                                          const WeightFunction& psi,
                                          FractionalOrder gamma) {
  (void)eta;
  const double g = gamma.value();
  const double lg = quad::log_gamma(g);

  // With v = -ln K2(X2) ~ Exp(1): E[h(X2)] = int_0^inf h(K2^-1(e^-v)) e^-v dv.
  auto weight = [g, lg](double v) {
    return std::exp((g - 1.0) * std::log(v) - v - lg);
  };
  const quad::Hint hints =
      quad::Hint::kAlgebraicAtLo | quad::Hint::kDecayAtInfinity;

  auto run = [&](const std::function<double(double)>& h, const char* label) {
    quad::Integrand f{[&](double v) {
                        const double w = weight(v);
                        if (w == 0.0) return 0.0;
                        const double x = model2.quantile_from_log(-v);
                        const double hx = h(x);
                        if (hx == 0.0) return 0.0;
                        return hx * w;
                      },
                      0.0, quad::kInfinity, hints};
    try {
      return quad::integrate(f).value;
    } catch (const NonConvergence& e) {
      std::ostringstream os;
      os << "PRH expectation " << label << " at order " << g
         << " diverges or fails to converge: " << e.what();
      throw NonConvergence(os.str(), e.value(), e.error_estimate());
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << "PRH expectation " << label << " at order " << g
         << " is not finite: " << e.what();
      throw NonConvergence(os.str());
    }
  };

  PrhExpectationTerms terms;
  terms.order = g;
  terms.e_term = run([&](double x) { return x * psi(x); }, "E");
  if (psi.monotonicity() == Monotonicity::kConstant) {
    terms.e_tilde_term = 0.0;
  } else {
    terms.e_tilde_term = run(
        [&](double x) {
          const double d = psi.derivative(x);
          // K1 / k1 vanishes at the lower end where K1 = 0.
          if (d == 0.0 || x <= base.lower()) return 0.0;
          const double lambda = base.reversed_hazard(x);
          // Non-finite only where K1 underflows, i.e. at the lower end.
          if (!std::isfinite(lambda)) return 0.0;
          return x * d / lambda;
        },
        "E~");
  }
  return terms;
}

std::vector<PrhExpectationTerms> prh_term_ladder(const DistributionModel& base,
                                                 PrhParameter eta,
                                                 const WeightFunction& psi,
                                                 FractionalOrder gamma,
                                                 int count) {
  if (count < 1) throw DomainError("term ladder needs count >= 1");
  const DistributionModel model2 = prh_transform(base, eta);
  std::vector<PrhExpectationTerms> ladder;
  ladder.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    ladder.push_back(prh_expectation_terms(
        model2, base, eta, psi, FractionalOrder(gamma.value() + i)));
  }
  return ladder;
}

namespace {

void check_ladder(std::span<const PrhExpectationTerms> terms, std::size_t need) {
  if (terms.size() < need) {
    throw DomainError("PRH recurrence needs terms at " + std::to_string(need) +
                      " consecutive orders");
  }
  for (std::size_t i = 1; i < need; ++i) {
    if (std::abs(terms[i].order - terms[0].order - static_cast<double>(i)) >
        1e-12) {
      throw DomainError("PRH terms must be at orders g, g+1, g+2, ...");
    }
  }
}

}  // namespace

double prh_wfgcpe(const PrhExpectationTerms& at_gamma,
                  const PrhExpectationTerms& at_gamma_plus_1,
                  PrhParameter eta) {
  const PrhExpectationTerms pair[] = {at_gamma, at_gamma_plus_1};
  check_ladder(pair, 2);
  return at_gamma.e_term - at_gamma_plus_1.e_term -
         at_gamma_plus_1.e_tilde_term / eta.value();
}

double prh_recurrence_step(std::span<const PrhExpectationTerms> terms,
                           PrhParameter eta, double prior) {
  check_ladder(terms, 3);
  return terms[0].e_term - terms[2].e_term -
         (terms[1].e_tilde_term + terms[2].e_tilde_term) / eta.value() - prior;
}

double prh_n_step(int n, std::span<const PrhExpectationTerms> terms,
                  PrhParameter eta, double cpe_at_gamma) {
  if (n < 1) throw DomainError("n-step recurrence needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  check_ladder(terms, un + 2);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
  return terms[un].e_term - terms[un + 1].e_term -
         sign * (terms[0].e_term - terms[1].e_term) +
         (sign * terms[1].e_tilde_term - terms[un + 1].e_tilde_term) /
             eta.value() +
         sign * cpe_at_gamma;
}

}  // namespace wfgcpe
