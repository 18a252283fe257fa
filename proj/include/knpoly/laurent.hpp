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

#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "knpoly/bigint.hpp"

namespace knpoly {

/**
 * Sparse multivariate Laurent polynomial with integer coefficients.
 *
 * Terms are keyed by signed exponent vectors over an ordered list of
 * variable names. The variable list only holds names that occur with a
 * nonzero exponent in some term, so two polynomials are equal exactly when
 * their term sets are equal. Variables are ordered X, Y, Z, q, v first and
 * any other name afterwards in lexicographic order; binary operations align
 * operands by name.
 *
 * Values are immutable once built; every operation returns a new value.
 */
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, BigInt>;
  using Powers = std::vector<std::pair<std::string, int>>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers convert implicitly
  LaurentPoly(const BigInt& constant);  // NOLINT

  static LaurentPoly variable(const std::string& name);
  static LaurentPoly monomial(const BigInt& coefficient, const Powers& powers);
  /// sum_i coefficients[i] * name^i
  static LaurentPoly univariate(const std::vector<BigInt>& coefficients,
                                const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the given monomial (zero when absent).
  BigInt coefficient(const Powers& powers) const;
  /// Largest / smallest exponent of `name` over all terms; 0 when the
  /// variable does not occur or the polynomial is zero.
  int max_degree(const std::string& name) const;
  int min_degree(const std::string& name) const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Canonical text form: terms ordered by the first variable's exponent
  /// descending, ties broken by the remaining exponents ascending.
  std::string to_string() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.vars_ == q.vars_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }
  LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
  LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  LaurentPoly pow(unsigned exponent) const;

  /// Builds a polynomial from raw parts, dropping zero coefficients and
  /// unused variables.
  static LaurentPoly from_terms(std::vector<std::string> vars, TermMap terms);

 private:
  friend LaurentPoly poly_div_exact(const LaurentPoly& p, const LaurentPoly& q);

  // Copy of the terms re-expressed over `vars`, a superset of vars_.
  TermMap aligned_terms(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Sorts variable names into the canonical order and removes duplicates.
std::vector<std::string> canonical_variable_order(std::vector<std::string> names);

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Replaces `var` by `replacement`. A negative exponent of `var` is only
/// allowed when the replacement is a monomial with coefficient +1 or -1;
/// otherwise throws NonSubstitutable.
LaurentPoly poly_substitute(const LaurentPoly& p, const std::string& var,
                            const LaurentPoly& replacement);

/// Exact quotient p / q over the integers, by leading-term elimination in
/// lexicographic order. The quotient may only use a negative exponent of a
/// variable if p or q already does, so X / Y is not divisible while
/// X^-1 * Y / Y is. Throws NotDivisible or DivisionByZero.
LaurentPoly poly_div_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Exact value at a rational point. Every variable of p must be assigned.
Rational poly_eval(const LaurentPoly& p, const std::map<std::string, Rational>& assignment);

/// Integer-valued evaluation helper; throws NotDivisible if the value is not
/// an integer.
BigInt poly_eval_integer(const LaurentPoly& p, const std::map<std::string, BigInt>& assignment);

}  // namespace knpoly
