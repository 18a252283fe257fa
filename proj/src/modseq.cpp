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

#include "knpoly/modseq.hpp"

#include <string>
#include <utility>

#include "knpoly/errors.hpp"

namespace knpoly {

ResidueSequence::ResidueSequence(std::uint64_t modulus, long first, std::vector<std::uint64_t> v)
    : mu(modulus), start(first), values(std::move(v)) {
  if (mu < 2) throw InvalidArgument("ResidueSequence: modulus must be at least 2");
  if (start < 0) throw InvalidArgument("ResidueSequence: start index must be nonnegative");
  for (auto& x : values) x %= mu;
}

ResidueSequence ResidueSequence::from_integers(std::uint64_t modulus, long first,
                                               const std::vector<BigInt>& v) {
  if (modulus < 2) throw InvalidArgument("ResidueSequence: modulus must be at least 2");
  std::vector<std::uint64_t> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(mod_reduce(x, modulus));
  return ResidueSequence(modulus, first, std::move(r));
}

std::optional<PeriodReport> detect_ultimate_period(const ResidueSequence& s, int confirm_factor) {
  if (confirm_factor < 2) throw InvalidArgument("confirm_factor must be at least 2");
  const auto& a = s.values;
  const long len = static_cast<long>(a.size());
  for (long p = 1; static_cast<long>(confirm_factor) * p < len; ++p) {
    // smallest offset i0 with a[i+p] == a[i] for all i0 <= i < len - p
    long i0 = len - p;
    while (i0 > 0 && a[i0 - 1] == a[i0 - 1 + p]) --i0;
    if (len - 1 >= i0 + confirm_factor * p) {
      PeriodReport r;
      r.preperiod = s.start + i0;
      r.period = p;
      r.horizon = s.horizon();
      r.confirmed = true;
      return r;
    }
  }
  return std::nullopt;
}

bool period_holds(const ResidueSequence& s, const PeriodReport& r) {
  if (r.period < 1 || r.preperiod < s.start) return false;
  for (long n = r.preperiod; n + r.period <= s.horizon(); ++n) {
    if (s.at(n + r.period) != s.at(n)) return false;
  }
  return true;
}

ZeroTail is_trivially_zero(const ResidueSequence& s) {
  long i = static_cast<long>(s.values.size());
  while (i > 0 && s.values[i - 1] == 0) --i;
  const long tail = static_cast<long>(s.values.size()) - i;
  if (tail == 0 || static_cast<std::uint64_t>(tail) < s.mu) return {};
  return {true, s.start + i};
}

std::vector<std::uint64_t> shortest_recurrence_mod_p(const ResidueSequence& s) {
  const std::uint64_t p = s.mu;
  if (!is_prime(p)) throw NonPrimeModulus("Berlekamp-Massey needs a prime modulus, got " +
                                          std::to_string(p));
  const ModArith f(p);
  // connection polynomials c (current) and b (before last length change),
  // both with constant term 1
  std::vector<std::uint64_t> c{1}, b{1};
  std::size_t len = 0, shift = 1;
  std::uint64_t last_discrepancy = 1;
  const auto& a = s.values;
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::uint64_t d = a[n];
    for (std::size_t i = 1; i <= len; ++i) d = f.add(d, f.mul(c[i], a[n - i]));
    if (d == 0) {
      ++shift;
      continue;
    }
    const std::uint64_t coef = f.mul(d, *f.inverse(last_discrepancy));
    auto prev = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] = f.sub(c[i + shift], f.mul(coef, b[i]));
    if (2 * len <= n) {
      len = n + 1 - len;
      b = std::move(prev);
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1, 0);
  // a_n + c_1 a_{n-1} + ... = 0, so the recurrence coefficients are -c_i
  std::vector<std::uint64_t> out(len);
  for (std::size_t i = 1; i <= len; ++i) out[i - 1] = f.sub(0, c[i]);
  return out;
}

namespace {

// Solves rows of [A | y] by exact elimination; nullopt if inconsistent.
// Free unknowns are set to zero.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m, int k) {
  const std::size_t rows = m.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < k && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = 1 / m[r][col];
    for (int j = col; j <= k; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (int j = col; j <= k; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][k] != 0) return std::nullopt;
  }
  std::vector<Rational> x(k, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][k];
  return x;
}

}  // namespace

std::optional<std::vector<Rational>> find_integer_recurrence(const std::vector<BigInt>& values,
                                                             int max_order) {
  if (max_order < 1) throw InvalidArgument("find_integer_recurrence: max_order must be positive");
  const std::size_t need = 2 * static_cast<std::size_t>(max_order) + 2;
  if (values.size() < need) {
    throw InsufficientData("find_integer_recurrence: need at least " + std::to_string(need) +
                           " values, got " + std::to_string(values.size()));
  }
  for (int k = 1; k <= max_order; ++k) {
    std::vector<std::vector<Rational>> system;
    for (std::size_t n = k; n < values.size(); ++n) {
      std::vector<Rational> row(k + 1);
      for (int i = 1; i <= k; ++i) row[i - 1] = Rational(values[n - i]);
      row[k] = Rational(values[n]);
      system.push_back(std::move(row));
    }
    if (auto x = solve_exact(std::move(system), k)) return x;
  }
  return std::nullopt;
}

}  // namespace knpoly
