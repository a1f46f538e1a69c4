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


#include "wfgcpe/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfgcpe/analysis.hpp"
#include "wfgcpe/distribution.hpp"
#include "wfgcpe/empirical.hpp"
#include "wfgcpe/errors.hpp"
#include "wfgcpe/measures.hpp"
#include "wfgcpe/prh.hpp"
#include "wfgcpe/report.hpp"
#include "wfgcpe/tables.hpp"

namespace wfgcpe::cli {
namespace {

struct DistOptions {
  std::string dist = "power";
  double a = 0.0;
  double b = 1.0;
  double c = 2.0;
  double theta = 1.0;
  double shape = 2.0;
  std::optional<double> eta;
};

void add_dist_options(CLI::App* cmd, DistOptions& o) {
  cmd->add_option("--dist", o.dist, "power, frechet, uniform or weibull")
      ->check(CLI::IsMember({"power", "frechet", "uniform", "weibull"}));
  cmd->add_option("--a", o.a, "uniform shift a (support (a, a+1))");
  cmd->add_option("--b", o.b, "power/Frechet scale b");
  cmd->add_option("--c", o.c, "power/Frechet shape c");
  cmd->add_option("--theta", o.theta, "Weibull rate theta");
  cmd->add_option("--shape", o.shape, "Weibull shape");
  cmd->add_option("--eta", o.eta,
                  "apply the proportional reversed hazard transform K^eta");
}

DistributionModel build_model(const DistOptions& o) {
  DistributionModel base = [&] {
    if (o.dist == "power") return make_power(o.b, o.c);
    if (o.dist == "frechet") return make_frechet(o.b, o.c);
    if (o.dist == "uniform") return make_uniform_shifted(o.a);
    return make_weibull(o.theta, o.shape);
  }();
  if (o.eta) return prh_transform(base, PrhParameter(*o.eta));
  return base;
}

std::string describe(const DistributionModel& m) {
  std::ostringstream os;
  os << m.name() << "(";
  bool first = true;
  for (const auto& [k, v] : m.parameters()) {
    os << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  os << ")";
  return os.str();
}

struct WeightOptions {
  std::string weight = "x";
  std::string custom_path;
};

void add_weight_options(CLI::App* cmd, WeightOptions& o) {
  auto* w = cmd->add_option("--weight", o.weight, "one, x, x2, sqrtx or expneg")
                ->check(CLI::IsMember({"one", "x", "x2", "sqrtx", "expneg"}));
  cmd->add_option("--weight-custom", o.custom_path,
                  "file of x,y knots for a piecewise-linear weight")
      ->excludes(w);
}

// Knot table: one "x y" pair per line, commas or whitespace, '#' comments.
WeightFunction load_custom_weight(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::vector<double> xs, ys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
    }
    std::istringstream tokens(line);
    std::vector<double> nums;
    std::string tok;
    while (tokens >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": not a number: '" + tok + "'",
                         line_no);
      }
    }
    if (nums.empty()) continue;
    if (nums.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two numbers (x y)",
                       line_no);
    }
    xs.push_back(nums[0]);
    ys.push_back(nums[1]);
  }
  if (xs.empty()) throw ParseError("'" + path + "' contains no knots", line_no);
  try {
    return WeightFunction::piecewise_linear(std::move(xs), std::move(ys));
  } catch (const DomainError& e) {
    throw ValidationError(std::string("weight table: ") + e.what());
  }
}

WeightFunction build_weight(const WeightOptions& o) {
  if (!o.custom_path.empty()) return load_custom_weight(o.custom_path);
  return *builtin_weight(o.weight);
}

std::uint64_t derive_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::optional<Reading> parse_reading(const std::string& s) {
  if (s == "literal") return Reading::kLiteral;
  if (s == "corrected") return Reading::kCorrected;
  return std::nullopt;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weighted fractional generalized cumulative past entropy toolkit",
               "wfgcpe"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format_name = "pretty";
  app.add_option("--format", format_name, "csv, json or pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate a measure of a model");
  DistOptions c_dist;
  WeightOptions c_weight;
  std::vector<double> c_gammas;
  std::string c_measure = "wfgcpe";
  double c_t = 0.0, c_u = 0.0;
  bool c_force_quad = false;
  add_dist_options(compute, c_dist);
  add_weight_options(compute, c_weight);
  compute->add_option("--gamma", c_gammas, "fractional order(s)")->required();
  compute
      ->add_option("--measure", c_measure,
                   "wfgcpe, normalized, wcpe, wfgcre, dynamic, tau or gamma0")
      ->check(CLI::IsMember({"wfgcpe", "normalized", "wcpe", "wfgcre", "dynamic",
                             "tau", "gamma0"}));
  compute->add_option("--t", c_t, "inspection time for the dynamic measure");
  compute->add_option("--u", c_u, "lower limit for tau");
  compute->add_flag("--quadrature", c_force_quad,
                    "ignore closed forms and integrate numerically");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "empirical estimate from data");
  std::string e_input, e_reading = "corrected", e_export;
  WeightOptions e_weight;
  std::vector<double> e_gammas;
  estimate->add_option("--input", e_input, "data file or blood_cancer_43")
      ->required();
  estimate->add_option("--reading", e_reading, "literal or corrected (builtin)")
      ->check(CLI::IsMember({"literal", "corrected"}));
  add_weight_options(estimate, e_weight);
  estimate->add_option("--gamma", e_gammas, "fractional order(s)");
  estimate->add_option("--export", e_export,
                       "write the loaded sample to this file");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo of the estimator");
  std::string s_pop = "power-square";
  DistOptions s_dist;
  std::size_t s_n = 0, s_reps = 0;
  double s_gamma = 0.0;
  std::optional<std::uint64_t> s_seed;
  unsigned s_threads = 0;
  bool s_clt = false;
  simulate
      ->add_option("--pop", s_pop,
                   "power-square (K=x^2, psi=x), weibull (K=1-exp(-theta x^2), "
                   "psi=x) or self-weight (psi=k of --dist)")
      ->check(CLI::IsMember({"power-square", "weibull", "self-weight"}));
  add_dist_options(simulate, s_dist);
  simulate->add_option("--n", s_n, "sample size")->required();
  simulate->add_option("--gamma", s_gamma, "fractional order")->required();
  simulate->add_option("--replicates", s_reps, "number of replicates")
      ->required();
  simulate->add_option("--seed", s_seed, "64-bit seed (derived and printed if absent)");
  simulate->add_option("--threads", s_threads, "worker threads (0 = auto)");
  simulate->add_flag("--clt", s_clt, "add the normality diagnostic");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a reference table");
  int r_table = 0;
  std::string r_reading = "both";
  std::size_t r_reps = 0;
  std::optional<std::uint64_t> r_seed;
  reproduce->add_option("--table", r_table, "1, 2, 3 or 4")
      ->required()
      ->check(CLI::Range(1, 4));
  reproduce->add_option("--reading", r_reading, "literal, corrected or both")
      ->check(CLI::IsMember({"literal", "corrected", "both"}));
  reproduce->add_option("--replicates", r_reps,
                        "Monte Carlo replicates per cell (table 4)");
  reproduce->add_option("--seed", r_seed, "seed for --replicates");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate the bound suite");
  DistOptions b_dist;
  WeightOptions b_weight;
  double b_gamma = 0.0;
  std::string b_xi;
  std::optional<double> b_prh_eta;
  add_dist_options(bounds, b_dist);
  add_weight_options(bounds, b_weight);
  bounds->add_option("--gamma", b_gamma, "fractional order")->required();
  bounds->add_option("--xi", b_xi, "auxiliary weight for the power-weight bound")
      ->check(CLI::IsMember({"one", "x", "x2", "sqrtx", "expneg"}));
  bounds->add_option("--prh-eta", b_prh_eta,
                     "also compare the PRH transform at this eta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Format format = *parse_format(format_name);

  try {
    if (compute->parsed()) {
      const DistributionModel model = build_model(c_dist);
      const WeightFunction psi = build_weight(c_weight);
      ReportDocument doc("compute", {"distribution", "weight", "measure",
                                     "gamma", "value", "abs_error", "converged"});
      for (double g : c_gammas) {
        const FractionalOrder gamma(g);
        MeasureReport r;
        if (c_measure == "wfgcpe") {
          r = c_force_quad ? wfgcpe_quadrature(model, psi, gamma)
                           : wfgcpe(model, psi, gamma);
        } else if (c_measure == "normalized") {
          r = normalized_wfgcpe(model, psi, gamma);
        } else {
          r.method = Method::kQuadrature;
          r.quadrature.converged = true;
          if (c_measure == "wcpe") {
            r = wfgcpe_quadrature(model, psi, FractionalOrder(1.0));
          } else if (c_measure == "wfgcre") {
            r.value = wfgcre(model, psi, gamma);
          } else if (c_measure == "dynamic") {
            r.value = dynamic_wfgcpe(model, psi, gamma, c_t);
          } else if (c_measure == "tau") {
            r.value = tau(model, psi, gamma, c_u);
          } else {
            r.value = wfgcpe_gamma_zero_limit(model, psi);
          }
        }
        doc.add_row({describe(model), psi.name(), c_measure, g, r.value,
                     r.quadrature.abs_error_estimate, r.quadrature.converged},
                    std::string(to_string(r.method)));
      }
      doc.write(out, format);
      return kExitOk;
    }

    if (estimate->parsed()) {
      const Reading reading = *parse_reading(e_reading);
      const EmpiricalSample sample = load_dataset(e_input, reading);
      if (!e_export.empty()) export_dataset(sample, e_export);
      if (e_gammas.empty()) {
        if (e_export.empty()) {
          err << "error: estimate needs --gamma or --export\n";
          return kExitUsage;
        }
        return kExitOk;
      }
      const WeightFunction psi = build_weight(e_weight);
      ReportDocument doc("estimate", {"dataset", "n", "weight", "gamma", "value"});
      doc.add_metadata("source", sample.source());
      doc.add_metadata("dataset_reading",
                       e_input == kBloodCancerTag
                           ? std::string(to_string(reading))
                           : std::string(sample.is_sorted() ? "sorted"
                                                            : "as-listed"));
      for (double g : e_gammas) {
        doc.add_row({e_input, static_cast<long long>(sample.size()), psi.name(),
                     g, empirical_wfgcpe(sample, psi, FractionalOrder(g))},
                    "empirical");
      }
      doc.write(out, format);
      return kExitOk;
    }

    if (simulate->parsed()) {
      const std::uint64_t seed = s_seed ? *s_seed : derive_seed();
      if (!s_seed) err << "seed: " << seed << "\n";
      const FractionalOrder gamma(s_gamma);
      std::optional<DistributionModel> population;
      std::optional<WeightFunction> psi;
      SamplingMoments per, joint;
      if (s_pop == "power-square") {
        population = make_power(1.0, 2.0);
        psi = WeightFunction::x();
        per = exact_moments_power_square(s_n, gamma);
        joint = exact_moments_power_square(s_n, gamma, VarianceForm::kJointSpacing);
      } else if (s_pop == "weibull") {
        population = make_weibull(s_dist.theta, 2.0);
        psi = WeightFunction::x();
        per = joint = exact_moments_weibull(s_n, gamma, s_dist.theta);
      } else {
        population = build_model(s_dist);
        psi = WeightFunction::self_density(*population);
        per = exact_moments_self_weight(s_n, gamma);
        joint = exact_moments_self_weight(s_n, gamma, VarianceForm::kJointSpacing);
      }
      SimulationConfig config{s_reps, s_n, seed, *population, *psi, gamma,
                              s_threads};
      const SimulationSummary sim = simulate_estimator(config);
      ReportDocument doc("simulate", {"quantity", "value", "std_error"});
      doc.add_metadata("population", s_pop);
      doc.add_metadata("seed", static_cast<unsigned long long>(seed));
      doc.add_metadata("replicates", static_cast<long long>(s_reps));
      doc.add_metadata("n", static_cast<long long>(s_n));
      doc.add_metadata("gamma", s_gamma);
      doc.add_row({std::string("mean"), sim.mean, sim.mean_se}, "simulation");
      doc.add_row({std::string("mean"), per.mean, Cell{}}, "closed_form");
      doc.add_row({std::string("variance"), sim.variance ? Cell{*sim.variance} : Cell{},
                   sim.variance_se ? Cell{*sim.variance_se} : Cell{}},
                  "simulation");
      doc.add_row({std::string("variance_per_spacing"), per.variance, Cell{}},
                  "closed_form");
      doc.add_row({std::string("variance_joint"), joint.variance, Cell{}},
                  "closed_form");
      if (s_clt) {
        const CltReport clt = clt_diagnostic(config, joint);
        doc.add_row({std::string("ks_distance"), clt.ks_distance, Cell{}},
                    "simulation");
        doc.add_row({std::string("ks_threshold"), clt.threshold, Cell{}},
                    "simulation");
        doc.add_row({std::string("skewness"), clt.skewness, Cell{}}, "simulation");
        doc.add_row({std::string("excess_kurtosis"), clt.excess_kurtosis, Cell{}},
                    "simulation");
        doc.add_metadata("clt_verdict", std::string(to_string(clt.verdict)));
      }
      doc.write(out, format);
      return kExitOk;
    }

    if (reproduce->parsed()) {
      std::optional<ReportDocument> doc;
      switch (r_table) {
        case 1: doc = table_closed_forms(); break;
        case 2: doc = table_normalized_closed_forms(); break;
        case 3: {
          std::vector<Reading> readings;
          if (r_reading != "corrected") readings.push_back(Reading::kLiteral);
          if (r_reading != "literal") readings.push_back(Reading::kCorrected);
          doc = table_blood_cancer(readings);
          break;
        }
        default: {
          std::uint64_t seed = 0;
          if (r_reps > 0) {
            seed = r_seed ? *r_seed : derive_seed();
            if (!r_seed) err << "seed: " << seed << "\n";
          }
          doc = table_power_square_moments(r_reps, seed);
        }
      }
      doc->add_metadata("table", static_cast<long long>(r_table));
      doc->write(out, format);
      return kExitOk;
    }

    if (bounds->parsed()) {
      const DistributionModel model = build_model(b_dist);
      const WeightFunction psi = build_weight(b_weight);
      const FractionalOrder gamma(b_gamma);
      BoundOptions options;
      if (!b_xi.empty()) options.xi = *builtin_weight(b_xi);
      BoundSuiteReport report = bound_suite(model, psi, gamma, options);
      if (b_prh_eta) {
        report.checks.push_back(prh_bound(model, PrhParameter(*b_prh_eta), psi, gamma));
      }
      ReportDocument doc("bounds", {"bound", "applicable", "relation", "lhs",
                                    "rhs", "slack", "holds", "reason"});
      doc.add_metadata("distribution", describe(model));
      doc.add_metadata("weight", psi.name());
      doc.add_metadata("gamma", b_gamma);
      for (const auto& b : report.checks) {
        if (b.applicable) {
          doc.add_row({std::string(to_string(b.id)), true, b.relation, b.lhs,
                       b.rhs, b.slack, b.holds(), std::string()},
                      "quadrature");
        } else {
          doc.add_row({std::string(to_string(b.id)), false, std::string(), Cell{},
                       Cell{}, Cell{}, Cell{}, b.reason},
                      "quadrature");
        }
      }
      doc.write(out, format);
      return kExitOk;
    }
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const WeightAntiderivativeUnavailable& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wfgcpe::cli
