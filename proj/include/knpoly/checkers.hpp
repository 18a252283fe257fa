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
#include <string>
#include <utility>
#include <vector>

#include "knpoly/bigint.hpp"
#include "knpoly/modseq.hpp"

namespace knpoly {

/// One compared quantity. `lhs` is the computed value, `rhs` the claimed one.
struct CheckRow {
  long n = 0;
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string verdict;  // pass | fail
};

/// Periodicity outcome of one sequence; `error` is set when the leg could
/// not be run (for example a divisibility precondition).
struct PeriodLeg {
  std::string name;
  std::optional<PeriodReport> report;
  std::string error;
};

struct CheckReport {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  long horizon = 0;
  std::vector<PeriodLeg> legs;
  std::vector<CheckRow> rows;
  std::vector<std::string> notes;
  std::string summary;  // pass | fail | undetected

  std::size_t failures() const;
};

/// Theorem checkers enforce the hypotheses and report periodicity only.
CheckReport check_theorem1(std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon);
CheckReport check_theorem3(std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon);
/// Legs S, C and xi; the xi leg records an error instead of throwing.
CheckReport check_theorem4(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t mu,
                           long horizon);

/// T(K_n;1,b) mod p^k against the branches of the proposition for
/// max(p^k, n_min) <= n <= n_max. The unnamed branch term C_m(b) is read as
/// T(K_m;1,b). Throws HypothesisViolation when b = 1 mod p.
CheckReport check_mani_stones_prop(std::uint64_t p, int k, std::int64_t b, long n_min, long n_max);

/// Both cases of the conjecture for max(p^k, n_min) <= n <= n_max; reports,
/// never asserts.
CheckReport check_mani_stones_conj(std::uint64_t p, int k, std::int64_t a, std::int64_t b,
                                   long n_min, long n_max);

/// Periodicity of He_n(a) mod mu, and the table He_n(a) = a^n mod mu.
CheckReport check_carlitz(std::int64_t a, std::uint64_t mu, long horizon);

/// b_2(n) mod 2 against the indicator of powers of two, even n <= horizon,
/// plus a periodicity leg that is expected to stay undetected.
CheckReport check_lucas(long horizon);

/// d(n+p) = d(n) prod_{i<p} 2^i (mod p) for 1 <= n <= horizon - p, with
/// d(n) = 2^(n choose 2). A second row per n checks the form with the extra
/// factor 2^n; the summary follows the first form.
CheckReport check_dgraphs_congruence(std::uint64_t p, long horizon);

/// Labeled 3-regular graphs on n vertices from the double-sum formula, with
/// the unreadable glyph taken as multiplication. Odd n gives 0. Throws
/// NonIntegralResult when the sum is not an integer.
BigInt redfield_r3(long n);
/// The same sum without the integrality check.
Rational redfield_r3_raw(long n);

}  // namespace knpoly
