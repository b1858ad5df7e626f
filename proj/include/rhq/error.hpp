// Copyright 2026 The rhq Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rhq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unbound symbol, wrong parameter vector length, non-finite value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Qubit index out of range, mismatched register sizes, malformed gate.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds what the dense backend is willing to allocate.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A differentiated symbol feeds a gate the shift rule cannot handle.
class UnsupportedGradientError : public Error {
 public:
  using Error::Error;
};

/// Perturbation position cannot be chosen (e.g. random slot in an empty circuit).
class PositionError : public Error {
 public:
  using Error::Error;
};

/// OpenQASM front-end failure, carrying a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace rhq
