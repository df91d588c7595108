// Copyright 2026 The stripe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace stripe {

using cdouble = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Invalid configuration. `field()` names the offending key, e.g. "tau_p".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A factorization or solve failed, or a roundoff guard tripped.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller broke an API contract (dimension mismatch, missing data).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An argument lies outside the mathematical domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace stripe
