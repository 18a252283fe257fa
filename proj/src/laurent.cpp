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

#include "knpoly/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "knpoly/errors.hpp"

namespace knpoly {
namespace {

int variable_rank(const std::string& name) {
  static const char* kKnown[] = {"X", "Y", "Z", "q", "v"};
  for (int i = 0; i < 5; ++i) {
    if (name == kKnown[i]) return i;
  }
  return 5;
}

bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return canonical_variable_order(std::move(all));
}

int index_of(const std::vector<std::string>& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

struct ExponentHash {
  std::size_t operator()(const LaurentPoly::Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : e) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

void add_term(LaurentPoly::TermMap& terms, const LaurentPoly::Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("negative power of zero");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  BigInt num = ipow(base.get_num(), static_cast<unsigned long>(exponent));
  BigInt den = ipow(base.get_den(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<std::string> canonical_variable_order(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), variable_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

LaurentPoly LaurentPoly::variable(const std::string& name) {
  return monomial(1, {{name, 1}});
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, const Powers& powers) {
  std::vector<std::string> names;
  for (const auto& [name, e] : powers) names.push_back(name);
  auto vars = canonical_variable_order(names);
  Exponents exps(vars.size(), 0);
  for (const auto& [name, e] : powers) exps[index_of(vars, name)] += e;
  TermMap terms;
  add_term(terms, exps, coefficient);
  return from_terms(std::move(vars), std::move(terms));
}

LaurentPoly LaurentPoly::univariate(const std::vector<BigInt>& coefficients,
                                    const std::string& name) {
  TermMap terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    add_term(terms, Exponents{static_cast<int>(i)}, coefficients[i]);
  }
  return from_terms({name}, std::move(terms));
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  // drop variables whose exponent is zero in every term
  std::vector<bool> used(vars.size(), false);
  for (const auto& [e, c] : terms) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  LaurentPoly out;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
    out.vars_ = std::move(vars);
    out.terms_ = std::move(terms);
    return out;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (used[i]) out.vars_.push_back(vars[i]);
  }
  for (auto& [e, c] : terms) {
    Exponents reduced;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) reduced.push_back(e[i]);
    }
    out.terms_.emplace(std::move(reduced), std::move(c));
  }
  return out;
}

LaurentPoly::TermMap LaurentPoly::aligned_terms(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = index_of(vars, vars_[i]);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents wide(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) wide[where[i]] = e[i];
    out.emplace(std::move(wide), c);
  }
  return out;
}

BigInt LaurentPoly::coefficient(const Powers& powers) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : powers) {
    int i = index_of(vars_, name);
    if (i < 0) {
      if (k != 0) return 0;
      continue;
    }
    e[i] += k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::max_degree(const std::string& name) const {
  int i = index_of(vars_, name);
  if (i < 0 || terms_.empty()) return 0;
  int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
  return best;
}

int LaurentPoly::min_degree(const std::string& name) const {
  int i = index_of(vars_, name);
  if (i < 0 || terms_.empty()) return 0;
  int best = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
  return best;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const auto& x = a->first;
    const auto& y = b->first;
    if (x.empty()) return false;
    if (x[0] != y[0]) return x[0] > y[0];
    return std::lexicographical_compare(x.begin() + 1, x.end(), y.begin() + 1, y.end());
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  auto vars = merge_variables(p.vars_, q.vars_);
  auto terms = p.aligned_terms(vars);
  for (const auto& [e, c] : q.aligned_terms(vars)) add_term(terms, e, c);
  return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto vars = merge_variables(p.vars_, q.vars_);
  auto a = p.aligned_terms(vars);
  auto b = q.aligned_terms(vars);
  std::unordered_map<LaurentPoly::Exponents, BigInt, ExponentHash> acc;
  acc.reserve(a.size() * b.size());
  LaurentPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = acc[e];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  LaurentPoly::TermMap terms;
  for (auto& [ex, c] : acc) {
    if (c != 0) terms.emplace(ex, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(vars), std::move(terms));
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base(*this);
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly poly_substitute(const LaurentPoly& p, const std::string& var,
                            const LaurentPoly& replacement) {
  const auto& vars = p.variables();
  int at = index_of(vars, var);
  if (at < 0) return p;

  bool invertible = replacement.is_monomial() &&
                    abs(replacement.terms().begin()->second) == 1;
  if (p.min_degree(var) < 0 && !invertible) {
    throw NonSubstitutable("cannot substitute a non-monomial for " + var +
                           ", which occurs with a negative exponent");
  }
  LaurentPoly inverse;
  if (invertible) {
    const auto& [e, c] = *replacement.terms().begin();
    LaurentPoly::Powers powers;
    for (std::size_t i = 0; i < e.size(); ++i) {
      powers.emplace_back(replacement.variables()[i], -e[i]);
    }
    inverse = LaurentPoly::monomial(c, powers);  // c is +1 or -1, its own inverse
  }

  std::map<int, LaurentPoly> power_cache;
  auto power_of = [&](int k) -> const LaurentPoly& {
    auto it = power_cache.find(k);
    if (it != power_cache.end()) return it->second;
    LaurentPoly value = k >= 0 ? replacement.pow(static_cast<unsigned>(k))
                               : inverse.pow(static_cast<unsigned>(-k));
    return power_cache.emplace(k, std::move(value)).first->second;
  };

  // group terms by the exponent of var, then multiply each group once
  std::map<int, LaurentPoly::TermMap> groups;
  for (const auto& [e, c] : p.terms()) {
    auto rest = e;
    rest[at] = 0;
    groups[e[at]].emplace(std::move(rest), c);
  }
  LaurentPoly out;
  for (auto& [k, terms] : groups) {
    auto cofactor = LaurentPoly::from_terms(vars, std::move(terms));
    out += cofactor * power_of(k);
  }
  return out;
}

LaurentPoly poly_div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DivisionByZero("poly_div_exact: zero divisor");
  if (p.is_zero()) return {};

  auto vars = merge_variables(p.variables(), q.variables());
  const std::size_t nv = vars.size();
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const auto& name = vars[i];
    lo[i] = p.min_degree(name) - q.min_degree(name);
    hi[i] = p.max_degree(name) - q.max_degree(name);
    if (p.min_degree(name) >= 0 && q.min_degree(name) >= 0) lo[i] = std::max(lo[i], 0);
    if (lo[i] > hi[i]) {
      throw NotDivisible("poly_div_exact: degree in " + name + " rules out a quotient");
    }
  }

  auto rem = p.aligned_terms(vars);
  const auto divisor = q.aligned_terms(vars);
  const auto& [lead_e, lead_c] = *divisor.rbegin();
  LaurentPoly::TermMap quotient;

  LaurentPoly::Exponents shift(nv), target(nv);
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (std::size_t i = 0; i < nv; ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < lo[i] || shift[i] > hi[i]) {
        throw NotDivisible("poly_div_exact: " + p.to_string() + " is not divisible by " +
                           q.to_string());
      }
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw NotDivisible("poly_div_exact: coefficient " + rc.get_str() +
                         " not divisible by " + lead_c.get_str());
    }
    BigInt t = exact_div(rc, lead_c);
    quotient.emplace(shift, t);
    for (const auto& [de, dc] : divisor) {
      for (std::size_t i = 0; i < nv; ++i) target[i] = de[i] + shift[i];
      add_term(rem, target, BigInt(-t * dc));
    }
  }
  return LaurentPoly::from_terms(std::move(vars), std::move(quotient));
}

Rational poly_eval(const LaurentPoly& p, const std::map<std::string, Rational>& assignment) {
  const auto& vars = p.variables();
  std::vector<Rational> values;
  for (const auto& name : vars) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw InvalidArgument("poly_eval: no value assigned to " + name);
    }
    if (it->second == 0 && p.min_degree(name) < 0) {
      throw DivisionByZero("poly_eval: zero assigned to " + name +
                           ", which has a negative exponent");
    }
    values.push_back(it->second);
  }
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= rational_pow(values[i], e[i]);
    total += term;
  }
  total.canonicalize();
  return total;
}

BigInt poly_eval_integer(const LaurentPoly& p, const std::map<std::string, BigInt>& assignment) {
  std::map<std::string, Rational> rational;
  for (const auto& [name, value] : assignment) rational.emplace(name, Rational(value));
  Rational r = poly_eval(p, rational);
  if (r.get_den() != 1) {
    throw NotDivisible("poly_eval_integer: value " + to_string(r) + " is not an integer");
  }
  return r.get_num();
}

}  // namespace knpoly
