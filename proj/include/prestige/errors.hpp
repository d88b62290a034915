//
// Copyright 2026 The Prestige Authors
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
//

#ifndef PRESTIGE_ERRORS_HPP_
#define PRESTIGE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prestige {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid hyperparameter or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Invalid argument to an operation (non-finite value, bad label, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Feature index outside the model / dataset dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed sparse text input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace prestige

#endif  // PRESTIGE_ERRORS_HPP_
