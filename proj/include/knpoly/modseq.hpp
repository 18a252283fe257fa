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

#include <cstdint>
#include <optional>
#include <vector>

#include "knpoly/bigint.hpp"

namespace knpoly {

/// a_n mod mu for n = start .. start + values.size() - 1.
struct ResidueSequence {
  std::uint64_t mu = 2;
  long start = 0;
  std::vector<std::uint64_t> values;

  ResidueSequence() = default;
  /// Reduces every value mod mu.
  ResidueSequence(std::uint64_t mu, long start, std::vector<std::uint64_t> values);
  static ResidueSequence from_integers(std::uint64_t mu, long start,
                                       const std::vector<BigInt>& values);

  long horizon() const { return start + static_cast<long>(values.size()) - 1; }
  std::uint64_t at(long n) const { return values[static_cast<std::size_t>(n - start)]; }
};

/// a_{n+P} = a_n for preperiod <= n <= horizon - P. Indices are absolute.
struct PeriodReport {
  long preperiod = 0;
  long period = 1;
  long horizon = 0;
  bool confirmed = false;
};

/// Smallest period P, then smallest preperiod N for it, such that the
/// observed tail repeats and horizon >= N + confirm_factor * P. nullopt when
/// no period is confirmed at this horizon.
std::optional<PeriodReport> detect_ultimate_period(const ResidueSequence& s,
                                                   int confirm_factor = 3);

/// Re-checks the window equation of a report against the data.
bool period_holds(const ResidueSequence& s, const PeriodReport& r);

struct ZeroTail {
  bool trivially_zero = false;
  long onset = 0;  // first index of the zero tail, valid when trivially_zero
};

/// True when the sequence ends in at least mu zeros.
ZeroTail is_trivially_zero(const ResidueSequence& s);

/// a_n = c_1 a_{n-1} + ... + c_L a_{n-L} mod p; returns c_1..c_L (empty for
/// the zero sequence). Throws NonPrimeModulus when mu is not prime.
std::vector<std::uint64_t> shortest_recurrence_mod_p(const ResidueSequence& s);

/// f(n) = c_1 f(n-1) + ... + c_k f(n-k) with rational c_i, minimal k <=
/// max_order, holding on every window position. Throws InsufficientData
/// when values.size() < 2 * max_order + 2.
std::optional<std::vector<Rational>> find_integer_recurrence(const std::vector<BigInt>& values,
                                                             int max_order);

}  // namespace knpoly
