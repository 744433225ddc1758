// Copyright 2026 The povmforge Authors
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

#ifndef POVMFORGE_ERRORS_HPP
#define POVMFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace povmforge {

/// Operand dimensions are incompatible.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value violates a domain invariant (non-unitary, non-Hermitian, not a POVM, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size cap of an exact algorithm.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace povmforge

#endif  // POVMFORGE_ERRORS_HPP
