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


#include <random>

#include "knpoly/complete.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"
#include "knpoly/modseq.hpp"
#include "util.hpp"

using namespace knpoly;

namespace {

ResidueSequence generated(std::uint64_t mu, long first, long last,
                          const std::function<BigInt(long)>& f) {
  std::vector<BigInt> v;
  for (long n = first; n <= last; ++n) v.push_back(f(n));
  return ResidueSequence::from_integers(mu, first, v);
}

BigInt fact_of(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Reference detector: forward scan over every (P, N) in the documented order.
std::optional<std::pair<long, long>> reference_period(const std::vector<std::uint64_t>& a, int cf) {
  const long len = static_cast<long>(a.size());
  for (long p = 1; p < len; ++p) {
    for (long n0 = 0; n0 + cf * p <= len - 1; ++n0) {
      bool ok = true;
      for (long i = n0; i + p < len && ok; ++i) ok = a[i] == a[i + p];
      if (ok) return std::pair{n0, p};
    }
  }
  return std::nullopt;
}

bool primitive(const std::vector<std::uint64_t>& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool same = true;
    for (std::size_t i = 0; i < p && same; ++i) same = cycle[i] == cycle[(i + d) % p];
    if (same) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ultimate period examples") {
  auto pow3 = generated(4, 0, 20, [](long n) { return ipow(3, n); });
  auto r = detect_ultimate_period(pow3);
  REQUIRE(r);
  CHECK(r->preperiod == 0);
  CHECK(r->period == 2);
  CHECK(r->horizon == 20);
  CHECK(r->confirmed);

  auto fact = generated(6, 0, 20, fact_of);
  r = detect_ultimate_period(fact);
  REQUIRE(r);
  CHECK(r->preperiod == 3);
  CHECK(r->period == 1);

  auto b2 = generated(2, 0, 64, [](long n) { return lucas_b2(n); });
  CHECK_FALSE(detect_ultimate_period(b2).has_value());

  // preperiod is reported as an absolute index
  auto shifted = generated(6, 1, 20, fact_of);
  CHECK(detect_ultimate_period(shifted)->preperiod == 3);
  CHECK_THROWS_AS(detect_ultimate_period(pow3, 1), InvalidArgument);
}

TEST_CASE("confirmation margin") {
  // 0,0,0,1,0,0,0,1 has period 4 but only 1 repetition past the first block
  ResidueSequence s(2, 0, {0, 0, 0, 1, 0, 0, 0, 1});
  CHECK_FALSE(detect_ultimate_period(s).has_value());
  ResidueSequence longer(2, 0, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0});
  auto r = detect_ultimate_period(longer);
  REQUIRE(r);
  CHECK(r->period == 4);
  CHECK(r->preperiod == 0);
}

TEST_CASE("trivial zero tails") {
  auto f5 = generated(5, 0, 20, fact_of);
  auto z = is_trivially_zero(f5);
  CHECK(z.trivially_zero);
  CHECK(z.onset == 5);
  CHECK_FALSE(is_trivially_zero(generated(3, 0, 20, [](long n) { return ipow(2, n); }))
                  .trivially_zero);
  auto sqgrid = generated(4, 0, 30, [](long n) {
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? fact_of(n) : BigInt(0);
  });
  z = is_trivially_zero(sqgrid);
  CHECK(z.trivially_zero);
  CHECK(z.onset == 2);
  // a zero tail shorter than mu terms is not enough
  CHECK_FALSE(is_trivially_zero(ResidueSequence(7, 0, {1, 2, 0, 0, 0})).trivially_zero);
}

TEST_CASE("shortest recurrence modulo a prime") {
  std::vector<std::uint64_t> fib{0, 1};
  while (fib.size() < 40) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  CHECK(shortest_recurrence_mod_p(ResidueSequence(5, 0, fib)) ==
        std::vector<std::uint64_t>{1, 1});
  CHECK(shortest_recurrence_mod_p(ResidueSequence(7, 0, std::vector<std::uint64_t>(20, 4))) ==
        std::vector<std::uint64_t>{1});
  CHECK(shortest_recurrence_mod_p(generated(7, 0, 30, [](long n) { return ipow(2, n); })) ==
        std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(shortest_recurrence_mod_p(ResidueSequence(6, 0, fib)), NonPrimeModulus);
}

TEST_CASE("shortest recurrence reproduces random LFSR sequences") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}[trial % 6];
    const int order = 1 + trial % 5;
    std::vector<std::uint64_t> coef(order), a(order);
    for (auto& c : coef) c = rng() % p;
    for (auto& x : a) x = rng() % p;
    while (a.size() < 60) {
      std::uint64_t next = 0;
      for (int i = 1; i <= order; ++i) next = (next + coef[i - 1] * a[a.size() - i]) % p;
      a.push_back(next);
    }
    auto found = shortest_recurrence_mod_p(ResidueSequence(p, 0, a));
    CHECK(static_cast<int>(found.size()) <= order);
    for (std::size_t n = found.size(); n < a.size(); ++n) {
      std::uint64_t next = 0;
      for (std::size_t i = 1; i <= found.size(); ++i) next = (next + found[i - 1] * a[n - i]) % p;
      CHECK(next == a[n]);
    }
  }
}

TEST_CASE("integer recurrence search") {
  std::vector<BigInt> pow2, fact, trees, clique;
  for (long n = 0; n <= 10; ++n) pow2.push_back(ipow(2, n));
  for (long n = 0; n <= 9; ++n) fact.push_back(fact_of(n));
  for (int n = 1; n <= 20; ++n) trees.push_back(tutte_complete_eval(n, 1, 1));
  for (int n = 1; n <= 12; ++n) clique.push_back(ipow(2, n));
  auto r = find_integer_recurrence(pow2, 3);
  REQUIRE(r);
  CHECK(*r == std::vector<Rational>{2});
  CHECK_FALSE(find_integer_recurrence(fact, 2).has_value());
  CHECK_FALSE(find_integer_recurrence(trees, 6).has_value());
  CHECK(find_integer_recurrence(clique, 2)->size() == 1);
  CHECK_THROWS_AS(find_integer_recurrence(pow2, 5), InsufficientData);
}

TEST_CASE("integer recurrence round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + trial % 4;
    std::vector<BigInt> coef(order), a(order);
    for (auto& c : coef) c = small(rng);
    for (auto& x : a) x = small(rng);
    while (a.size() < 2 * order + 6) {
      BigInt next = 0;
      for (int i = 1; i <= order; ++i) next += coef[i - 1] * a[a.size() - i];
      a.push_back(next);
    }
    auto found = find_integer_recurrence(a, order);
    REQUIRE(found);
    CHECK(static_cast<int>(found->size()) <= order);
    for (std::size_t n = found->size(); n < a.size(); ++n) {
      Rational next = 0;
      for (std::size_t i = 1; i <= found->size(); ++i) next += (*found)[i - 1] * a[n - i];
      CHECK(next == Rational(a[n]));
    }
  }
}

TEST_CASE("period templates are recovered exactly") {
  std::mt19937_64 rng(20240607);
  int exact = 0, total = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::uint64_t mu = 2 + rng() % 11;
    const long p = 1 + static_cast<long>(rng() % 20);
    const long n0 = static_cast<long>(rng() % 16);
    const int cf = 2 + static_cast<int>(rng() % 2);
    std::vector<std::uint64_t> cycle(p);
    do {
      for (auto& x : cycle) x = rng() % mu;
    } while (!primitive(cycle));
    const long horizon = n0 + cf * p + static_cast<long>(rng() % 12);
    std::vector<std::uint64_t> a(horizon + 1);
    for (long i = n0; i <= horizon; ++i) a[i] = cycle[(i - n0) % p];
    for (long i = n0 - 1; i >= 0; --i) {
      a[i] = rng() % mu;
      if (i == n0 - 1 && a[i] == a[i + p]) a[i] = (a[i] + 1) % mu;
    }
    ResidueSequence s(mu, 0, a);
    auto r = detect_ultimate_period(s, cf);
    auto ref = reference_period(a, cf);
    REQUIRE(r.has_value() == ref.has_value());
    ++total;
    if (!r) continue;
    CHECK(r->preperiod == ref->first);
    CHECK(r->period == ref->second);
    CHECK(period_holds(s, *r));
    bool recurrence = true;
    for (long n = r->preperiod; n + r->period <= horizon; ++n) {
      recurrence = recurrence && (a[n + r->period] + mu - a[n]) % mu == 0;
    }
    CHECK(recurrence);
    if (r->preperiod == n0 && r->period == p) ++exact;
  }
  // coincidental shorter periods near the horizon are rare
  CHECK(exact * 10 >= total * 9);
}

TEST_CASE("period minimality") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t mu = 2 + rng() % 5;
    std::vector<std::uint64_t> a(40 + rng() % 100);
    const long p = 1 + static_cast<long>(rng() % 64);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = i < static_cast<std::size_t>(p) ? rng() % mu : a[i - p];
    }
    ResidueSequence s(mu, 0, a);
    auto r = detect_ultimate_period(s, 2);
    if (!r) continue;
    const long h = s.horizon();
    bool shorter = false;
    for (long q = 1; q < r->period && !shorter; ++q) {
      for (long n0 = 0; n0 <= h - 2 * q && !shorter; ++n0) {
        bool ok = true;
        for (long i = n0; i + q <= h && ok; ++i) ok = a[i + q] == a[i];
        shorter = ok;
      }
    }
    CHECK_FALSE(shorter);
  }
}
