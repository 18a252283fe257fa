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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knpoly {

/// Arbitrary precision signed integer. GMP keeps zero canonical.
using BigInt = mpz_class;
/// Exact rational, always stored in lowest terms with positive denominator.
using Rational = mpq_class;

BigInt ipow(const BigInt& base, unsigned long exponent);

/// a / b when b divides a; throws NotDivisible otherwise.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// Residue of x in [0, mu).
std::uint64_t mod_reduce(const BigInt& x, std::uint64_t mu);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

/// Arithmetic in Z/mZ for m < 2^63.
class ModArith {
 public:
  explicit ModArith(std::uint64_t modulus);

  std::uint64_t modulus() const { return m_; }
  std::uint64_t reduce(std::int64_t x) const;
  std::uint64_t reduce(const BigInt& x) const { return mod_reduce(x, m_); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;
  /// Inverse of a, or nullopt when gcd(a, m) != 1.
  std::optional<std::uint64_t> inverse(std::uint64_t a) const;

 private:
  std::uint64_t m_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// gcd(|a|, m) for a signed a.
std::uint64_t gcd_signed(std::int64_t a, std::uint64_t m);
bool is_prime(std::uint64_t n);

/// Exact binomial coefficients, filled by Pascal's rule up to a fixed row.
/// Immutable after construction, so a single table may be shared.
class PascalTable {
 public:
  explicit PascalTable(std::size_t max_row);

  std::size_t max_row() const { return rows_.size() - 1; }
  /// binom(n, k), zero when k > n.
  const BigInt& operator()(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

/// Rows of Pascal's triangle reduced mod m, produced one at a time so that
/// long modular scans need O(n) memory.
class PascalRowMod {
 public:
  explicit PascalRowMod(const ModArith& ring);

  /// Current row index; starts at 0 (the row [1]).
  std::size_t index() const { return row_.size() - 1; }
  const std::vector<std::uint64_t>& row() const { return row_; }
  void advance();

 private:
  ModArith ring_;
  std::vector<std::uint64_t> row_;
};

}  // namespace knpoly
