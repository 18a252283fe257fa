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

#include "knpoly/checkers.hpp"

#include <stdexcept>

#include "knpoly/complete.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"

namespace knpoly {
namespace {

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(std::uint64_t x) { return std::to_string(x); }

std::uint64_t prime_power(std::uint64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw InvalidArgument("p^k too large");
    q *= p;
  }
  return q;
}

// A proved statement cannot fail; a broken window equation is a bug here.
PeriodLeg period_leg(std::string name, const ResidueSequence& s) {
  PeriodLeg leg{std::move(name), detect_ultimate_period(s), {}};
  if (leg.report && !period_holds(s, *leg.report)) {
    throw std::logic_error("period detector returned a report its data contradicts");
  }
  return leg;
}

void add_row(CheckReport& r, long n, std::string label, std::uint64_t lhs, std::uint64_t rhs) {
  r.rows.push_back({n, std::move(label), str(lhs), str(rhs), lhs == rhs ? "pass" : "fail"});
}

std::string summarize_legs(const CheckReport& r) {
  for (const auto& leg : r.legs) {
    if (leg.error.empty() && !leg.report) return "undetected";
  }
  return "pass";
}

std::string summarize_rows(const CheckReport& r) { return r.failures() ? "fail" : "pass"; }

void require_hypothesis_gcd(const char* name, std::int64_t x, std::uint64_t mu) {
  const std::uint64_t g = gcd_signed(x - 1, mu);
  if (g != 1) {
    throw HypothesisViolation(std::string("gcd(") + name + "-1, mu) = gcd(" + str(x - 1) + ", " +
                              str(mu) + ") = " + str(g) + ", not 1");
  }
}

}  // namespace

std::size_t CheckReport::failures() const {
  std::size_t count = 0;
  for (const auto& row : rows) count += row.verdict == "fail";
  return count;
}

CheckReport check_theorem1(std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon) {
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  if (a <= 1 || b <= 1) throw HypothesisViolation("a and b must both exceed 1");
  require_hypothesis_gcd("a", a, mu);
  require_hypothesis_gcd("b", b, mu);
  CheckReport r;
  r.claim = "theorem1";
  r.params = {{"a", str(a)}, {"b", str(b)}, {"mu", str(mu)}};
  r.horizon = horizon;
  ResidueSequence s(mu, 1, tutte_mod_sequence_fast(static_cast<int>(horizon), a, b, mu));
  r.legs.push_back(period_leg("T(K_n;a,b)", s));
  r.summary = summarize_legs(r);
  return r;
}

CheckReport check_theorem3(std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon) {
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  CheckReport r;
  r.claim = "theorem3";
  r.params = {{"a", str(a)}, {"b", str(b)}, {"mu", str(mu)}};
  r.horizon = horizon;
  FamilyParams p{a, b, 1};
  r.legs.push_back(period_leg("Mbar(K_n;a,b)", residue_sequence("matching", p, mu, horizon)));
  r.summary = summarize_legs(r);
  return r;
}

CheckReport check_theorem4(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t mu,
                           long horizon) {
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  CheckReport r;
  r.claim = "theorem4";
  r.params = {{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"mu", str(mu)}};
  r.horizon = horizon;
  FamilyParams p{a, b, c};
  r.legs.push_back(period_leg("S(K_n;a,b,c)", residue_sequence("subgraph", p, mu, horizon)));
  r.legs.push_back(period_leg("C(K_n;a,b,c)", residue_sequence("covered", p, mu, horizon)));
  try {
    r.legs.push_back(period_leg("xi(K_n;a,b,c)", residue_sequence("xi", p, mu, horizon)));
  } catch (const DivisibilityViolation& e) {
    r.legs.push_back({"xi(K_n;a,b,c)", std::nullopt, std::string("DivisibilityViolation: ") + e.what()});
  } catch (const ZeroVariable& e) {
    r.legs.push_back({"xi(K_n;a,b,c)", std::nullopt, std::string("ZeroVariable: ") + e.what()});
  }
  r.summary = summarize_legs(r);
  return r;
}

CheckReport check_mani_stones_prop(std::uint64_t p, int k, std::int64_t b, long n_min,
                                   long n_max) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (k < 1) throw InvalidArgument("k must be positive");
  const ModArith mod_p(p);
  if (mod_p.reduce(b) == 1 % p) throw HypothesisViolation("b = 1 mod p");
  const std::uint64_t pk = prime_power(p, k);
  const ModArith ring(pk);
  const std::uint64_t phi_pk = totient(pk), phi_p = totient(p);

  CheckReport r;
  r.claim = "mani-stones-prop";
  r.params = {{"p", str(p)}, {"k", str(static_cast<std::int64_t>(k))}, {"b", str(b)}};
  r.horizon = n_max;
  r.notes.push_back("branch term C_m(b) read as T(K_m;1,b)");
  const long first = std::max<long>(static_cast<long>(pk), n_min);
  if (n_max >= first) {
    const auto t = tutte_complete_sequence(static_cast<int>(n_max), 1, b);  // t[m-1] = T(K_m;1,b)
    const std::uint64_t rb = ring.reduce(b);
    for (long n = first; n <= n_max; ++n) {
      const std::uint64_t lhs = ring.reduce(t[n - 1]);
      if (p >= 3 && n > static_cast<long>(p)) {
        const std::uint64_t rhs =
            ring.mul(ring.pow(rb, phi_pk / 2), ring.reduce(t[n - static_cast<long>(phi_pk) - 1]));
        add_row(r, n, "p>=3, n>p: b^(phi(p^k)/2) C_{n-phi(p^k)}(b)", lhs, rhs);
      } else if (p >= 3 && n == static_cast<long>(p)) {
        add_row(r, n, "p>=3, n=p: b^(phi(p)/2) - 1", lhs, ring.sub(ring.pow(rb, phi_p / 2), 1 % pk));
      } else if (p == 2 && n == 2) {
        add_row(r, n, "p=n=2: 1", lhs, 1 % pk);
      } else if (p == 2 && k == 2 && n == 4) {
        add_row(r, n, "p=k=2, n=4: 2", lhs, 2 % pk);
      } else {
        add_row(r, n, "otherwise: 0", lhs, 0);
      }
    }
  }
  r.summary = summarize_rows(r);
  return r;
}

CheckReport check_mani_stones_conj(std::uint64_t p, int k, std::int64_t a, std::int64_t b,
                                   long n_min, long n_max) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (k < 1) throw InvalidArgument("k must be positive");
  const std::uint64_t pk = prime_power(p, k);
  const ModArith mod_p(p), mod_pk(pk);
  const std::uint64_t phi_pk = totient(pk), phi_p = totient(p);
  const bool case_one = mod_p.reduce(b) != 1;

  CheckReport r;
  r.claim = "mani-stones-conj";
  r.params = {{"p", str(p)}, {"k", str(static_cast<std::int64_t>(k))}, {"a", str(a)}, {"b", str(b)}};
  r.horizon = n_max;
  r.notes.push_back(case_one ? "case (i): b != 1 mod p, congruences mod p"
                             : "case (ii): b = 1 mod p, congruences mod p^k");
  const long first = std::max<long>(static_cast<long>(pk), n_min);
  if (n_max >= first) {
    const auto t = tutte_complete_sequence(static_cast<int>(n_max), a, b);  // t[m-1] = T(K_m;a,b)
    for (long n = first; n <= n_max; ++n) {
      if (case_one) {
        const std::uint64_t lhs = mod_p.reduce(t[n - 1]);
        const std::uint64_t rb = mod_p.reduce(b);
        if (n == static_cast<long>(p) && mod_p.reduce(a) == 1) {
          add_row(r, n, "(i) n=p, a=1 mod p: b^(phi(p)/2 - 1)", lhs, mod_p.pow(rb, phi_p / 2 - 1));
        } else {
          const std::uint64_t rhs = mod_p.mul(mod_p.pow(rb, phi_pk / 2),
                                              mod_p.reduce(t[n - static_cast<long>(phi_pk) - 1]));
          add_row(r, n, "(i) b^(phi(p^k)/2) T(K_{n-phi(p^k)};a,b)", lhs, rhs);
        }
      } else {
        const std::uint64_t lhs = mod_pk.reduce(t[n - 1]);
        if (n > static_cast<long>(pk)) {
          const std::uint64_t base = mod_pk.reduce(static_cast<std::int64_t>(n) + a - 1);
          const std::uint64_t rhs = mod_pk.mul(mod_pk.pow(base, pk),
                                               mod_pk.reduce(t[n - static_cast<long>(pk) - 1]));
          add_row(r, n, "(ii) n>p^k: (n+a-1)^(p^k) T(K_{n-p^k};a,b)", lhs, rhs);
        } else {
          add_row(r, n, "(ii) n=p^k: (a-1)^(p^k-1)", lhs, mod_pk.pow(mod_pk.reduce(a - 1), pk - 1));
        }
      }
    }
  }
  r.summary = summarize_rows(r);
  return r;
}

CheckReport check_carlitz(std::int64_t a, std::uint64_t mu, long horizon) {
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  if (horizon < 0) throw InvalidArgument("horizon must be nonnegative");
  CheckReport r;
  r.claim = "carlitz";
  r.params = {{"a", str(a)}, {"mu", str(mu)}};
  r.horizon = horizon;
  const ModArith ring(mu);
  ResidueSequence he(mu, 0, hermite_mod_sequence(static_cast<int>(horizon), a, mu));
  r.legs.push_back(period_leg("He_n(a)", he));
  std::uint64_t power = 1 % mu;
  const std::uint64_t ra = ring.reduce(a);
  for (long n = 0; n <= horizon; ++n) {
    add_row(r, n, "He_n(a) = a^n", he.at(n), power);
    power = ring.mul(power, ra);
  }
  r.notes.push_back(std::string("periodicity: ") + (r.legs[0].report ? "confirmed" : "undetected"));
  r.notes.push_back("He_n(a) = a^n: " + std::to_string(r.failures()) + " of " +
                    std::to_string(r.rows.size()) + " rows fail");
  if (r.failures()) {
    r.summary = "fail";
  } else {
    r.summary = summarize_legs(r);
  }
  return r;
}

CheckReport check_lucas(long horizon) {
  if (horizon < 8) throw InvalidArgument("lucas: horizon must be at least 8");
  CheckReport r;
  r.claim = "lucas";
  r.horizon = horizon;
  auto s = residue_sequence("lucas-b2", {}, 2, horizon);
  for (long n = 2; n <= horizon; n += 2) {
    const bool power_of_two = (n & (n - 1)) == 0;
    add_row(r, n, "b_2(n) mod 2 = [n is a power of 2]", s.at(n), power_of_two ? 1 : 0);
  }
  r.legs.push_back(period_leg("b_2(n) mod 2", s));
  if (r.failures()) {
    r.summary = "fail";
  } else {
    // the claim is non-periodicity, so a confirmed period contradicts it
    r.summary = r.legs[0].report ? "fail" : "pass";
  }
  return r;
}

CheckReport check_dgraphs_congruence(std::uint64_t p, long horizon) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  CheckReport r;
  r.claim = "dgraphs";
  r.params = {{"p", str(p)}};
  r.horizon = horizon;
  const ModArith ring(p);
  auto d = [&](long n) { return ring.pow(2 % p, static_cast<std::uint64_t>(n * (n - 1) / 2)); };
  const std::uint64_t product = ring.pow(2 % p, p * (p - 1) / 2);  // prod_{i<p} 2^i
  std::size_t displayed_failures = 0;
  for (long n = 1; n + static_cast<long>(p) <= horizon; ++n) {
    const std::uint64_t lhs = d(n + static_cast<long>(p));
    const std::uint64_t shown = ring.mul(d(n), product);
    const std::uint64_t fermat = ring.mul(ring.mul(d(n), ring.pow(2 % p, n)), product);
    displayed_failures += lhs != shown;
    add_row(r, n, "displayed", lhs, shown);
    add_row(r, n, "with factor 2^n", lhs, fermat);
  }
  r.summary = displayed_failures ? "fail" : "pass";
  r.notes.push_back("displayed form: " + std::to_string(displayed_failures) + " failures");
  r.notes.push_back("form with factor 2^n: " +
                    std::to_string(r.failures() - displayed_failures) + " failures");
  return r;
}

Rational redfield_r3_raw(long n) {
  if (n < 0) throw InvalidArgument("redfield_r3: negative n");
  if (n % 2 != 0) return 0;
  const long m = n / 2;
  auto fact = [](long x) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    return f;
  };
  Rational outer = 0;
  for (long k = 0; k <= m; ++k) {
    for (long j = 0; j <= 2 * k; ++j) {
      Rational inner = 0;
      for (long i = 0; 2 * i <= j; ++i) {
        Rational piece(BigInt((i % 2 ? -1 : 1) * fact(j)), BigInt(fact(j - 2 * i) * fact(i)));
        piece.canonicalize();
        inner += piece;
      }
      Rational term(BigInt((j % 2 ? -1 : 1) * fact(6 * k - 2 * j) * ipow(6, j)),
                    BigInt(fact(3 * k - j) * fact(2 * k - j) * fact(m - k)));
      term.canonicalize();
      outer += term * Rational(ipow(48, k)) * inner;
    }
  }
  Rational lead(fact(n), ipow(6, m));
  lead.canonicalize();
  return lead * outer;
}

BigInt redfield_r3(long n) {
  Rational value = redfield_r3_raw(n);
  if (value.get_den() != 1) {
    throw NonIntegralResult("redfield_r3(" + std::to_string(n) + ") = " + to_string(value) +
                            " is not an integer");
  }
  return value.get_num();
}

}  // namespace knpoly
