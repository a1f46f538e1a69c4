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


#ifndef WFGCPE_ERRORS_HPP_
#define WFGCPE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wfgcpe {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget, or an expectation
// that must be finite was detected as divergent.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double value, double error_estimate)
      : Error(what), value_(value), error_estimate_(error_estimate) {}
  explicit NonConvergence(const std::string& what)
      : NonConvergence(what, 0.0, 0.0) {}

  double value() const { return value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

// A closed form was requested at parameters where it diverges.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// gamma -> 0+ limit requested on a distribution with infinite support.
class UnboundedSupport : public Error {
 public:
  using Error::Error;
};

class DegenerateNormalizer : public Error {
 public:
  using Error::Error;
};

// h in a Riemann-Liouville integral is not strictly increasing.
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

// Hypothesis of a verified implication is not met by the inputs.
class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class WeightAntiderivativeUnavailable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace wfgcpe

#endif  // WFGCPE_ERRORS_HPP_
