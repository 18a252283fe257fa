// Copyright 2026 The knpoly Authors
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

namespace knpoly {

/// Base of every error raised by the library. Callers that only need a
/// diagnostic can catch this and print what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exactalg
class NotDivisible : public Error {
 public:
  using Error::Error;
};
class NonSubstitutable : public Error {
 public:
  using Error::Error;
};
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// enumeration limits
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// graph input
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// preconditions of the evaluation and analysis operations
class InvalidArgument : public Error {
 public:
  using Error::Error;
};
class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};
class ZeroVariable : public Error {
 public:
  using Error::Error;
};
class NonPrimeModulus : public Error {
 public:
  using Error::Error;
};
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A theorem checker was called outside the theorem's hypotheses.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Redfield's cubic-graph formula produced a non-integer.
class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

}  // namespace knpoly
