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

#include "knpoly/families.hpp"

#include <algorithm>

#include "knpoly/errors.hpp"

namespace knpoly {
namespace {

const std::vector<std::string> kAuxiliary{"lucas-b2", "dgraphs", "hermite"};

std::int64_t to_i64(const BigInt& x, const char* name) {
  if (!x.fits_slong_p()) {
    throw InvalidArgument(std::string("parameter ") + name + " does not fit in 64 bits");
  }
  return x.get_si();
}

FamilyId family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw InvalidArgument("unknown family or sequence: " + name);
  return *f;
}

// drops index 0 from an n = 0..N residue vector
std::vector<std::uint64_t> from_one(std::vector<std::uint64_t> v) {
  v.erase(v.begin());
  return v;
}

BigInt hermite_value(long n, const BigInt& a) {
  BigInt prev = 1, cur = a;
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    BigInt next = a * cur - k * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<std::string> sequence_names() {
  std::vector<std::string> out;
  for (auto f : all_families()) out.emplace_back(family_name(f));
  out.insert(out.end(), kAuxiliary.begin(), kAuxiliary.end());
  return out;
}

bool is_sequence_name(const std::string& name) {
  return parse_family(name).has_value() ||
         std::find(kAuxiliary.begin(), kAuxiliary.end(), name) != kAuxiliary.end();
}

long sequence_start(const std::string& name) {
  if (!is_sequence_name(name)) throw InvalidArgument("unknown family or sequence: " + name);
  return name == "hermite" ? 0 : 1;
}

BigInt lucas_b2(long n) {
  if (n < 2 || n % 2 != 0) return 0;
  BigInt central;
  mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
  return exact_div(central, 2);
}

BigInt dgraphs(long n) {
  if (n < 0) throw InvalidArgument("dgraphs: negative n");
  return ipow(2, static_cast<unsigned long>(n * (n - 1) / 2));
}

BigInt family_value(FamilyId family, int n, const FamilyParams& p) {
  switch (family) {
    case FamilyId::Tutte:
      return tutte_complete_eval(n, p.a, p.b);
    case FamilyId::GenMatching:
      return matching_family_eval(n, MatchingKind::Generating, p.a);
    case FamilyId::DefectMatching:
      return matching_family_eval(n, MatchingKind::Defect, p.a);
    case FamilyId::BivariateMatching:
      return matching_family_eval(n, MatchingKind::Bivariate, p.a, p.b);
    case FamilyId::Xi:
      return xi_complete_eval(n, p.a, p.b, p.c);
    case FamilyId::SubgraphCounting:
      return s_complete_eval(n, p.a, p.b, p.c);
    case FamilyId::CoveredComponents:
      return c_complete_eval(n, p.a, p.b, p.c);
    default:
      return simple_closed_form(family, n, p.b);
  }
}

LaurentPoly family_polynomial(FamilyId family, int n, const SymbolicBudget& budget) {
  if (n < 0) throw InvalidArgument("family_polynomial: negative n");
  const auto X = LaurentPoly::variable("X");
  const auto Y = LaurentPoly::variable("Y");
  switch (family) {
    case FamilyId::Tutte:
      return tutte_complete_symbolic(n, budget.tutte);
    case FamilyId::GenMatching:
    case FamilyId::DefectMatching:
    case FamilyId::BivariateMatching: {
      const auto m = matching_complete(n);
      LaurentPoly sum;
      for (int k = 0; k < static_cast<int>(m.size()); ++k) {
        const unsigned rest = static_cast<unsigned>(n - 2 * k);
        if (family == FamilyId::GenMatching) {
          sum += LaurentPoly(m[k]) * X.pow(k);
        } else if (family == FamilyId::DefectMatching) {
          sum += LaurentPoly(k % 2 ? BigInt(-m[k]) : m[k]) * X.pow(rest);
        } else {
          sum += LaurentPoly(m[k]) * X.pow(k) * Y.pow(rest);
        }
      }
      return sum;
    }
    case FamilyId::Xi:
      return xi_complete_symbolic(n, budget.trivariate);
    case FamilyId::SubgraphCounting:
      return s_complete(n, budget.trivariate);
    case FamilyId::CoveredComponents:
      return c_complete(n, budget.trivariate);
    case FamilyId::Independence:
      return LaurentPoly(n) * X + 1;
    case FamilyId::Clique:
      return (X + 1).pow(static_cast<unsigned>(n));
    case FamilyId::Chromatic: {
      LaurentPoly prod(1);
      for (int i = 0; i < n; ++i) prod *= X - i;
      return prod;
    }
    case FamilyId::Domination: {
      if (n < 1) throw InvalidArgument("domination: n must be at least 1");
      LaurentPoly d = X;
      for (int m = 1; m < n; ++m) d = d * (X + 1) + X;
      return d;
    }
    case FamilyId::Interlace:
      if (n < 1) throw InvalidArgument("interlace: n must be at least 1");
      return LaurentPoly(ipow(2, static_cast<unsigned long>(n - 1))) * X;
  }
  throw InvalidArgument("family_polynomial: unknown family");
}

std::vector<BigInt> exact_sequence(const std::string& name, const FamilyParams& p, long n_max) {
  const long start = sequence_start(name);
  std::vector<BigInt> out;
  if (n_max < start) return out;
  if (name == "lucas-b2" || name == "dgraphs" || name == "hermite") {
    for (long n = start; n <= n_max; ++n) {
      out.push_back(name == "lucas-b2" ? lucas_b2(n)
                    : name == "dgraphs" ? dgraphs(n)
                                        : hermite_value(n, p.a));
    }
    return out;
  }
  const FamilyId f = family_or_throw(name);
  if (f == FamilyId::Tutte) return tutte_complete_sequence(static_cast<int>(n_max), p.a, p.b);
  for (long n = start; n <= n_max; ++n) out.push_back(family_value(f, static_cast<int>(n), p));
  return out;
}

ResidueSequence residue_sequence(const std::string& name, const FamilyParams& p,
                                 std::uint64_t mu, long horizon) {
  const long start = sequence_start(name);
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  if (horizon < start) throw InvalidArgument("horizon precedes the first index");
  const int h = static_cast<int>(horizon);
  if (name == "dgraphs") {
    const ModArith ring(mu);
    std::vector<std::uint64_t> v;
    for (long n = start; n <= horizon; ++n) {
      v.push_back(ring.pow(2 % mu, static_cast<std::uint64_t>(n * (n - 1) / 2)));
    }
    return ResidueSequence(mu, start, std::move(v));
  }
  if (name == "hermite") {
    return ResidueSequence(mu, start, hermite_mod_sequence(h, to_i64(p.a, "a"), mu));
  }
  if (name == "lucas-b2") return ResidueSequence::from_integers(mu, start, exact_sequence(name, p, horizon));

  const FamilyId f = family_or_throw(name);
  switch (f) {
    case FamilyId::Tutte:
      return ResidueSequence(mu, start,
                             tutte_mod_sequence(h, to_i64(p.a, "a"), to_i64(p.b, "b"), mu));
    case FamilyId::GenMatching:
      return ResidueSequence(mu, start,
                             from_one(bivariate_matching_mod_sequence(h, to_i64(p.a, "a"), 1, mu)));
    case FamilyId::DefectMatching:
      return ResidueSequence(
          mu, start, from_one(bivariate_matching_mod_sequence(h, -1, to_i64(p.a, "a"), mu)));
    case FamilyId::BivariateMatching:
      return ResidueSequence(mu, start,
                             from_one(bivariate_matching_mod_sequence(h, to_i64(p.a, "a"),
                                                                      to_i64(p.b, "b"), mu)));
    case FamilyId::Xi:
      return ResidueSequence(mu, start,
                             from_one(xi_complete_mod_sequence(h, to_i64(p.a, "a"), to_i64(p.b, "b"),
                                                               to_i64(p.c, "c"), mu)));
    case FamilyId::SubgraphCounting:
      return ResidueSequence(mu, start,
                             from_one(s_complete_mod_sequence(h, to_i64(p.a, "a"), to_i64(p.b, "b"),
                                                              to_i64(p.c, "c"), mu)));
    case FamilyId::CoveredComponents:
      return ResidueSequence(mu, start,
                             from_one(c_complete_mod_sequence(h, to_i64(p.a, "a"), to_i64(p.b, "b"),
                                                              to_i64(p.c, "c"), mu)));
    default:
      return ResidueSequence::from_integers(mu, start, exact_sequence(name, p, horizon));
  }
}

}  // namespace knpoly
