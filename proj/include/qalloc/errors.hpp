// Copyright 2026 The qalloc Authors
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

#ifndef QALLOC_ERRORS_HPP
#define QALLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qalloc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or vector dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but violates a structural invariant (totality,
/// transitivity, one holder per column, lifting positivity). The message
/// names the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Index out of range, empty subset, unknown element.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the caller's side was not met (e.g. repairing a column
/// that is already in good position).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Two deals cannot be chained.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its enumeration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace qalloc

#endif  // QALLOC_ERRORS_HPP
