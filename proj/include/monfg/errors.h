// Copyright 2026 The MONFG Toolkit Authors
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

#ifndef MONFG_ERRORS_H_
#define MONFG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monfg {

// Base class for all errors raised by the toolkit. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes, indices or values that violate a documented precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Malformed text (utility expressions, profile strings, game files).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input outside the sizes an operation supports.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

// Command-line arguments that cannot be interpreted.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace monfg

#endif  // MONFG_ERRORS_H_
