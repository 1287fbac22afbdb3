// Copyright 2026 The qclreg Authors
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
/**
 * @file
 * Exception types shared by every module.
 *
 * The CLI maps ValidationError (and its subclasses) to exit code 1 and
 * NumericalError (and its subclasses) to exit code 2.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qclreg {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments, inconsistent configuration, malformed inputs.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Qubit count or dense-matrix memory beyond the configured limits.
class CapacityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Descriptor value outside the domain of an encoder (M-type needs |x| <= 1).
class DomainError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Malformed CSV, config or model file. Carries the 1-based line number.
class ParseError : public ValidationError {
  public:
    ParseError(const std::string &what, std::size_t line)
        : ValidationError("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class NumericalError : public Error {
  public:
    using Error::Error;
};

/// The objective returned a non-finite value. Holds the parameters that
/// produced it.
class OptimizationError : public NumericalError {
  public:
    OptimizationError(const std::string &what, std::vector<double> point)
        : NumericalError(what), point_(std::move(point)) {}

    const std::vector<double> &point() const noexcept { return point_; }

  private:
    std::vector<double> point_;
};

} // namespace qclreg
