// Copyright 2026 The abelshift Authors.
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

#include <stdexcept>
#include <string>

namespace abelshift {

// Base for every error raised by the library. Subclasses only tag the category
// so callers (the CLI in particular) can map them to diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between groups, elements, characters or function tables.
class DimensionError : public Error {
  using Error::Error;
};

// A function value that the value register has no symbol for.
class AlphabetError : public Error {
  using Error::Error;
};

// Input outside the mathematical domain of an operation (e.g. a non-unit phase).
class DomainError : public Error {
  using Error::Error;
};

// Amplitude encoding would need the square root of a negative number.
class EncodingError : public Error {
  using Error::Error;
};

class PreconditionError : public Error {
  using Error::Error;
};

// Division by a zero function value.
class DivisionError : public Error {
  using Error::Error;
};

// Matrix is not a member of C_d(G).
class MembershipError : public Error {
  using Error::Error;
};

// Invalid construction parameters (reducible polynomial, bad index, ...).
class ConstructionError : public Error {
  using Error::Error;
};

}  // namespace abelshift
