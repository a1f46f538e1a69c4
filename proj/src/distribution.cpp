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


#include "wfgcpe/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "wfgcpe/errors.hpp"
#include "wfgcpe/quadrature.hpp"

namespace wfgcpe {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be a finite positive real");
  }
}

[[noreturn]] void throw_constraint(const char* family, const char* weight,
                                   double gamma, double threshold) {
  std::ostringstream os;
  os << family << " closed form for psi=" << weight << " requires gamma > "
     << threshold << " (got " << gamma << ")";
  throw ConstraintError(os.str());
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kPower: return "power";
    case Family::kFrechet: return "frechet";
    case Family::kUniformShifted: return "uniform-shifted";
    case Family::kWeibull: return "weibull";
    case Family::kPrh: return "prh";
    case Family::kAffine: return "affine";
    case Family::kCustom: return "custom";
  }
  return "unknown";
}

DistributionModel::DistributionModel(Spec spec)
    : spec_(std::make_shared<const Spec>(std::move(spec))) {
  if (!spec_->cdf || !spec_->pdf || !spec_->quantile) {
    throw DomainError("distribution needs cdf, pdf and quantile");
  }
  if (!std::isfinite(spec_->lower) || spec_->lower < 0.0 ||
      !(spec_->lower < spec_->upper)) {
    throw DomainError("distribution support must be (lower, upper) with "
                      "0 <= lower < upper");
  }
}

bool DistributionModel::bounded() const { return std::isfinite(upper()); }

double DistributionModel::cdf(double x) const {
  if (x <= lower()) return 0.0;
  if (x >= upper()) return 1.0;
  return spec_->cdf(x);
}

double DistributionModel::pdf(double x) const {
  if (x <= lower() || x >= upper()) return 0.0;
  return spec_->pdf(x);
}

double DistributionModel::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw DomainError("quantile needs u in [0, 1]");
  if (u == 0.0) return lower();
  if (u == 1.0) return upper();
  return spec_->quantile(u);
}

double DistributionModel::quantile_from_log(double log_u) const {
  if (!(log_u <= 0.0)) throw DomainError("quantile needs ln u <= 0");
  if (log_u == 0.0) return upper();
  if (log_u == -quad::kInfinity) return lower();
  if (spec_->log_quantile) return spec_->log_quantile(log_u);
  return spec_->quantile(std::exp(log_u));
}

double DistributionModel::survival(double x) const {
  if (x <= lower()) return 1.0;
  if (x >= upper()) return 0.0;
  if (spec_->log_survival) return std::exp(spec_->log_survival(x));
  return 1.0 - spec_->cdf(x);
}

double DistributionModel::log_cdf(double x) const {
  if (x <= lower()) return -quad::kInfinity;
  if (x >= upper()) return 0.0;
  if (spec_->log_cdf) return spec_->log_cdf(x);
  return std::log(spec_->cdf(x));
}

double DistributionModel::log_survival(double x) const {
  if (x <= lower()) return 0.0;
  if (x >= upper()) return -quad::kInfinity;
  if (spec_->log_survival) return spec_->log_survival(x);
  return std::log1p(-spec_->cdf(x));
}

double DistributionModel::reversed_hazard(double x) const {
  if (x <= lower()) throw DomainError("reversed hazard undefined where K = 0");
  // Left limit at a finite upper end, which quantiles of u near 1 round onto.
  if (x == upper()) return spec_->pdf(x);
  return pdf(x) / cdf(x);
}

std::optional<double> DistributionModel::parameter(
    const std::string& key) const {
  for (const auto& [k, v] : spec_->parameters) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<double> DistributionModel::closed_form_wfgcpe(
    WeightTag tag, double gamma) const {
  if (!spec_->wfgcpe_closed_form) return std::nullopt;
  return spec_->wfgcpe_closed_form(tag, gamma);
}

std::optional<double> DistributionModel::closed_form_normalized(
    WeightTag tag, double gamma) const {
  if (!spec_->normalized_closed_form) return std::nullopt;
  return spec_->normalized_closed_form(tag, gamma);
}

DistributionModel make_power(double b, double c) {
  require_positive(b, "power scale b");
  require_positive(c, "power shape c");
  DistributionModel::Spec s;
  s.name = "power";
  s.family = Family::kPower;
  s.parameters = {{"b", b}, {"c", c}};
  s.lower = 0.0;
  s.upper = b;
  s.cdf = [b, c](double x) { return std::pow(x / b, c); };
  s.log_cdf = [b, c](double x) { return c * std::log(x / b); };
  s.log_survival = [b, c](double x) { return std::log1p(-std::pow(x / b, c)); };
  s.pdf = [b, c](double x) { return c / b * std::pow(x / b, c - 1.0); };
  s.quantile = [b, c](double u) { return b * std::pow(u, 1.0 / c); };
  s.log_quantile = [b, c](double l) { return b * std::exp(l / c); };
  // int_0^b x^p (x/b)^c (-ln (x/b)^c)^g dx / Gamma(g+1)
  //   = b^(p+1) c^g / (c+p+1)^(g+1)
  s.wfgcpe_closed_form = [b, c](WeightTag tag,
                                double g) -> std::optional<double> {
    double p;
    if (tag == WeightTag::kX) {
      p = 1.0;
    } else if (tag == WeightTag::kXSquared) {
      p = 2.0;
    } else {
      return std::nullopt;
    }
    return std::exp((p + 1.0) * std::log(b) + g * std::log(c) -
                    (g + 1.0) * std::log(c + p + 1.0));
  };
  s.normalized_closed_form = [b, c](WeightTag tag,
                                    double g) -> std::optional<double> {
    double p;
    if (tag == WeightTag::kX) {
      p = 1.0;
    } else if (tag == WeightTag::kXSquared) {
      p = 2.0;
    } else {
      return std::nullopt;
    }
    return std::exp((g - 1.0) * std::log(c + p + 1.0) -
                    quad::log_gamma(g + 1.0) -
                    (p + 1.0) * (g - 1.0) * std::log(b));
  };
  return DistributionModel(std::move(s));
}

DistributionModel make_frechet(double b, double c) {
  require_positive(b, "Frechet scale b");
  require_positive(c, "Frechet shape c");
  DistributionModel::Spec s;
  s.name = "frechet";
  s.family = Family::kFrechet;
  s.parameters = {{"b", b}, {"c", c}};
  s.lower = 0.0;
  s.upper = quad::kInfinity;
  s.log_cdf = [b, c](double x) { return -b * std::pow(x, -c); };
  s.cdf = [b, c](double x) { return std::exp(-b * std::pow(x, -c)); };
  s.log_survival = [b, c](double x) {
    return std::log(-std::expm1(-b * std::pow(x, -c)));
  };
  s.pdf = [b, c](double x) {
    return std::exp(std::log(b * c) - (c + 1.0) * std::log(x) -
                    b * std::pow(x, -c));
  };
  s.quantile = [b, c](double u) { return std::pow(b / -std::log(u), 1.0 / c); };
  s.log_quantile = [b, c](double l) { return std::pow(b / -l, 1.0 / c); };
  // Weight x^p converges for gamma > (p+1)/c.
  s.wfgcpe_closed_form = [b, c](WeightTag tag,
                                double g) -> std::optional<double> {
    double p;
    if (tag == WeightTag::kX) {
      p = 1.0;
    } else if (tag == WeightTag::kXSquared) {
      p = 2.0;
    } else {
      return std::nullopt;
    }
    const double r = (p + 1.0) / c;
    if (!(g > r)) {
      throw_constraint("Frechet", tag == WeightTag::kX ? "x" : "x^2", g, r);
    }
    return std::exp(r * std::log(b) + quad::log_gamma(g - r) - std::log(c) -
                    quad::log_gamma(g + 1.0));
  };
  s.normalized_closed_form = [b, c](WeightTag tag,
                                    double g) -> std::optional<double> {
    double p;
    if (tag == WeightTag::kX) {
      p = 1.0;
    } else if (tag == WeightTag::kXSquared) {
      p = 2.0;
    } else {
      return std::nullopt;
    }
    const double r = (p + 1.0) / c;
    if (!(r < 1.0)) {
      std::ostringstream os;
      os << "Frechet normalized closed form needs c > " << p + 1.0
         << " (got c = " << c << ")";
      throw ConstraintError(os.str());
    }
    if (!(g > r)) {
      throw_constraint("Frechet", tag == WeightTag::kX ? "x" : "x^2", g, r);
    }
    return std::exp((g - 1.0) * std::log(c) - r * (g - 1.0) * std::log(b) +
                    quad::log_gamma(g - r) - g * quad::log_gamma(1.0 - r) -
                    2.0 * quad::log_gamma(g + 1.0));
  };
  return DistributionModel(std::move(s));
}

DistributionModel make_uniform_shifted(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw DomainError("uniform shift a must be a finite nonnegative real");
  }
  DistributionModel::Spec s;
  s.name = "uniform-shifted";
  s.family = Family::kUniformShifted;
  s.parameters = {{"a", a}};
  s.lower = a;
  s.upper = a + 1.0;
  s.cdf = [a](double x) { return x - a; };
  s.log_cdf = [a](double x) { return std::log(x - a); };
  s.log_survival = [a](double x) { return std::log(a + 1.0 - x); };
  s.pdf = [](double) { return 1.0; };
  s.quantile = [a](double u) { return a + u; };
  s.log_quantile = [a](double l) { return a + std::exp(l); };
  return DistributionModel(std::move(s));
}

DistributionModel make_weibull(double theta, double shape) {
  require_positive(theta, "Weibull rate theta");
  require_positive(shape, "Weibull shape");
  DistributionModel::Spec s;
  s.name = "weibull";
  s.family = Family::kWeibull;
  s.parameters = {{"theta", theta}, {"shape", shape}};
  s.lower = 0.0;
  s.upper = quad::kInfinity;
  s.cdf = [theta, shape](double x) {
    return -std::expm1(-theta * std::pow(x, shape));
  };
  s.log_cdf = [theta, shape](double x) {
    // log(1 - e^-z) without rounding K to 1 in the tail.
    const double z = theta * std::pow(x, shape);
    return z < M_LN2 ? std::log(-std::expm1(-z)) : std::log1p(-std::exp(-z));
  };
  s.log_survival = [theta, shape](double x) {
    return -theta * std::pow(x, shape);
  };
  s.pdf = [theta, shape](double x) {
    const double z = theta * std::pow(x, shape);
    return shape * z / x * std::exp(-z);
  };
  s.quantile = [theta, shape](double u) {
    return std::pow(-std::log1p(-u) / theta, 1.0 / shape);
  };
  s.log_quantile = [theta, shape](double l) {
    return std::pow(-std::log(-std::expm1(l)) / theta, 1.0 / shape);
  };
  return DistributionModel(std::move(s));
}

DistributionModel affine_transform(const DistributionModel& base, double a,
                                   double b) {
  require_positive(a, "affine scale a");
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw DomainError("affine shift b must be a finite nonnegative real");
  }
  DistributionModel::Spec s;
  s.name = "affine(" + base.name() + ")";
  s.family = Family::kAffine;
  s.parameters = base.parameters();
  s.parameters.emplace_back("scale", a);
  s.parameters.emplace_back("shift", b);
  s.lower = a * base.lower() + b;
  s.upper = a * base.upper() + b;
  s.cdf = [base, a, b](double x) { return base.cdf((x - b) / a); };
  s.log_cdf = [base, a, b](double x) { return base.log_cdf((x - b) / a); };
  s.log_survival = [base, a, b](double x) {
    return base.log_survival((x - b) / a);
  };
  s.pdf = [base, a, b](double x) { return base.pdf((x - b) / a) / a; };
  s.quantile = [base, a, b](double u) { return a * base.quantile(u) + b; };
  s.log_quantile = [base, a, b](double l) {
    return a * base.quantile_from_log(l) + b;
  };
  return DistributionModel(std::move(s));
}

DistributionModel make_custom(std::string name, double lower, double upper,
                              DistributionModel::Fn cdf,
                              DistributionModel::Fn pdf,
                              DistributionModel::Fn quantile) {
  DistributionModel::Spec s;
  s.name = std::move(name);
  s.family = Family::kCustom;
  s.lower = lower;
  s.upper = upper;
  s.cdf = std::move(cdf);
  s.pdf = std::move(pdf);
  s.quantile = std::move(quantile);
  DistributionModel model(std::move(s));

  constexpr int kProbes = 1024;
  double prev = 0.0;
  for (int i = 1; i < kProbes; ++i) {
    const double u = static_cast<double>(i) / kProbes;
    const double x = model.quantile(u);
    const double k = model.cdf(x);
    if (std::abs(k - u) > 1e-9) {
      std::ostringstream os;
      os << "custom distribution: K(K^-1(" << u << ")) = " << k;
      throw ValidationError(os.str());
    }
    if (k < prev) throw ValidationError("custom distribution: K decreasing");
    if (!(model.pdf(x) >= 0.0)) {
      throw ValidationError("custom distribution: negative density");
    }
    prev = k;
  }
  const double mass = quad::integral(
      [&model](double x) { return model.pdf(x); }, lower, upper,
      quad::Hint::kAlgebraicAtLo |
          (std::isfinite(upper) ? quad::Hint::kAlgebraicAtHi
                                : quad::Hint::kDecayAtInfinity),
      quad::Tolerance{1e-11, 1e-11});
  if (std::abs(mass - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "custom distribution: density integrates to " << mass;
    throw ValidationError(os.str());
  }
  return model;
}

double expectation(const DistributionModel& model,
                   const std::function<double(double)>& g) {
  return quad::integral(
      [&](double u) { return g(model.quantile(u)); }, 0.0, 1.0,
      quad::Hint::kAlgebraicAtLo | quad::Hint::kAlgebraicAtHi);
}

double mean(const DistributionModel& model) {
  return expectation(model, [](double x) { return x; });
}

double differential_entropy(const DistributionModel& model) {
  return -expectation(model, [&model](double x) {
    const double k = model.pdf(x);
    if (!(k > 0.0) || !std::isfinite(k)) return 0.0;  // support edge
    return std::log(k);
  });
}

double mean_inactivity_time(const DistributionModel& model, double t) {
  if (!(t > model.lower()) || t > model.upper() || !std::isfinite(t)) {
    std::ostringstream os;
    os << "mean inactivity time needs t in (" << model.lower() << ", "
       << model.upper() << "], got " << t;
    throw DomainError(os.str());
  }
  const double log_kt = model.log_cdf(t);
  return quad::integral(
      [&](double x) { return std::exp(model.log_cdf(x) - log_kt); },
      model.lower(), t, quad::Hint::kLogAtLo);
}

}  // namespace wfgcpe
