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

#include "knpoly/bigint.hpp"

#include <cstdlib>

#include "knpoly/errors.hpp"

namespace knpoly {

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DivisionByZero("exact_div: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw NotDivisible("exact_div: " + a.get_str() + " is not divisible by " +
                       b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::uint64_t mod_reduce(const BigInt& x, std::uint64_t mu) {
  if (mu == 0) throw InvalidArgument("modulus must be positive");
  // mpz_fdiv_ui returns the non-negative remainder for positive divisors.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(x.get_mpz_t(), mu);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ModArith::ModArith(std::uint64_t modulus) : m_(modulus) {
  if (modulus == 0 || modulus >= (std::uint64_t{1} << 63)) {
    throw InvalidArgument("modulus out of range");
  }
}

std::uint64_t ModArith::reduce(std::int64_t x) const {
  auto r = static_cast<std::int64_t>(x % static_cast<std::int64_t>(m_));
  if (r < 0) r += static_cast<std::int64_t>(m_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ModArith::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  return s >= m_ ? s - m_ : s;
}

std::uint64_t ModArith::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + (m_ - b);
}

std::uint64_t ModArith::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
}

std::uint64_t ModArith::pow(std::uint64_t base, std::uint64_t exponent) const {
  std::uint64_t result = 1 % m_;
  base %= m_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> ModArith::inverse(std::uint64_t a) const {
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 r0 = static_cast<__int128>(m_), r1 = static_cast<__int128>(a % m_);
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += m_;
  return static_cast<std::uint64_t>(t0 % m_);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd_signed(std::int64_t a, std::uint64_t m) {
  auto mag = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1
                   : static_cast<std::uint64_t>(a);
  return gcd_u64(mag, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PascalTable::PascalTable(std::size_t max_row) : rows_(max_row + 1), zero_(0) {
  for (std::size_t n = 0; n <= max_row; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
}

const BigInt& PascalTable::operator()(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) {
    throw InvalidArgument("PascalTable: row " + std::to_string(n) +
                          " beyond table size");
  }
  if (k > n) return zero_;
  return rows_[n][k];
}

PascalRowMod::PascalRowMod(const ModArith& ring) : ring_(ring), row_{1 % ring.modulus()} {}

void PascalRowMod::advance() {
  row_.push_back(row_.front());
  for (std::size_t k = row_.size() - 2; k >= 1; --k) {
    row_[k] = ring_.add(row_[k], row_[k - 1]);
  }
}

}  // namespace knpoly
