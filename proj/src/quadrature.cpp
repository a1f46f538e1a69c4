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


#include "wfgcpe/quadrature.hpp"

#include <math.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "wfgcpe/errors.hpp"

namespace wfgcpe::quad {
namespace {

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss 10-point nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745236327, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

// Grading exponent for singular finite endpoints. x = lo + L u^4 turns
// |ln x|^g into a bounded integrand and x^-p (p < 3/4) into a bounded one.
constexpr double kGrading = 4.0;

// One integration piece in its own transformed coordinate on (a, b).
struct Piece {
  std::function<double(double)> g;
  double a;
  double b;
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  std::size_t piece;
  bool operator<(const Panel& other) const { return error < other.error; }
};

[[noreturn]] void throw_not_finite(double x, double v) {
  std::ostringstream os;
  os << "integrand is not finite (" << v << ") at x = " << x;
  throw DomainError(os.str());
}

Panel gauss_kronrod(const Piece& p, double a, double b, std::size_t index) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = p.g(center);
  double kronrod = kWgk[10] * fc;
  double gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kXgk[i];
    const double sum = p.g(center - dx) + p.g(center + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss), index};
}

// Evaluates f at an interior point, nudging roundoff that landed on an
// endpoint back inside, and rejecting non-finite values.
double eval_inside(const Integrand& f, double x) {
  if (x <= f.lo) x = std::nextafter(f.lo, kInfinity);
  if (x >= f.hi) x = std::nextafter(f.hi, f.lo);
  const double v = f.eval(x);
  if (!std::isfinite(v)) throw_not_finite(x, v);
  return v;
}

// Builds the graded finite piece [lo, hi] with optional singular ends.
void add_finite(const Integrand& f, double lo, double hi, bool grade_lo,
                bool grade_hi, std::vector<Piece>& out) {
  const double len = hi - lo;
  if (grade_lo && grade_hi) {
    const double mid = lo + 0.5 * len;
    add_finite(f, lo, mid, true, false, out);
    add_finite(f, mid, hi, false, true, out);
    return;
  }
  if (grade_lo) {
    out.push_back(Piece{[&f, lo, len](double u) {
                          const double jac = kGrading * len * u * u * u;
                          if (jac == 0.0) return 0.0;
                          return eval_inside(f, lo + len * u * u * u * u) * jac;
                        },
                        0.0, 1.0});
  } else if (grade_hi) {
    out.push_back(Piece{[&f, hi, len](double u) {
                          const double w = 1.0 - u;
                          const double jac = kGrading * len * w * w * w;
                          if (jac == 0.0) return 0.0;
                          return eval_inside(f, hi - len * w * w * w * w) * jac;
                        },
                        0.0, 1.0});
  } else {
    out.push_back(
        Piece{[&f](double x) { return eval_inside(f, x); }, lo, hi});
  }
}

void add_tail(const Integrand& f, double start, std::vector<Piece>& out) {
  if (f.tail == TailMap::kRational) {
    out.push_back(Piece{[&f, start](double t) {
                          if (t <= 0.0) return 0.0;
                          const double x = start + (1.0 / t - 1.0);
                          if (!std::isfinite(x)) return 0.0;
                          return eval_inside(f, x) / (t * t);
                        },
                        0.0, 1.0});
  } else {
    out.push_back(Piece{[&f, start](double t) {
                          if (t <= 0.0) return 0.0;
                          const double x = start - std::log(t);
                          if (!std::isfinite(x)) return 0.0;
                          return eval_inside(f, x) / t;
                        },
                        0.0, 1.0});
  }
}

}  // namespace

QuadratureResult integrate_unchecked(const Integrand& f, Tolerance tol,
                                     std::size_t max_subdivisions) {
  if (!f.eval) throw DomainError("integrand has no evaluation function");
  if (!(tol.abs > 0.0) || !(tol.rel > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (!std::isfinite(f.lo) || f.lo < 0.0 || !(f.lo < f.hi)) {
    std::ostringstream os;
    os << "invalid integration domain (" << f.lo << ", " << f.hi << ")";
    throw DomainError(os.str());
  }

  const bool lo_singular = has(f.hints, Hint::kLogAtLo) ||
                           has(f.hints, Hint::kAlgebraicAtLo);
  const bool hi_singular = has(f.hints, Hint::kLogAtHi) ||
                           has(f.hints, Hint::kAlgebraicAtHi);

  std::vector<Piece> pieces;
  if (std::isinf(f.hi)) {
    if (lo_singular) {
      add_finite(f, f.lo, f.lo + 1.0, true, false, pieces);
      add_tail(f, f.lo + 1.0, pieces);
    } else {
      add_tail(f, f.lo, pieces);
    }
  } else {
    add_finite(f, f.lo, f.hi, lo_singular, hi_singular, pieces);
  }

  std::priority_queue<Panel> heap;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Panel p = gauss_kronrod(pieces[i], pieces[i].a, pieces[i].b, i);
    total += p.value;
    error += p.error;
    heap.push(p);
  }

  std::size_t panels = heap.size();
  auto target = [&] { return std::max(tol.abs, tol.rel * std::abs(total)); };
  while (error > target() && panels < max_subdivisions) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
    heap.pop();
    const Piece& piece = pieces[worst.piece];
    Panel left = gauss_kronrod(piece, worst.a, mid, worst.piece);
    Panel right = gauss_kronrod(piece, mid, worst.b, worst.piece);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  // Re-sum to shed the drift accumulated by incremental updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }

  QuadratureResult result;
  result.value = total;
  result.abs_error_estimate = error;
  result.subdivisions = panels;
  result.converged = error <= std::max(tol.abs, tol.rel * std::abs(total));
  return result;
}

QuadratureResult integrate(const Integrand& f, Tolerance tol,
                           std::size_t max_subdivisions) {
  QuadratureResult r = integrate_unchecked(f, tol, max_subdivisions);
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature did not converge on (" << f.lo << ", " << f.hi
       << "): value " << r.value << ", error estimate "
       << r.abs_error_estimate << " after " << r.subdivisions << " panels";
    throw NonConvergence(os.str(), r.value, r.abs_error_estimate);
  }
  return r;
}

double integral(const std::function<double(double)>& f, double lo, double hi,
                Hint hints, Tolerance tol) {
  if (lo == hi) return 0.0;
  return integrate(Integrand{f, lo, hi, hints}, tol).value;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma requires x > 0");
  return std::tgamma(x);
}

}  // namespace wfgcpe::quad
