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

#include "knpoly/complete.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "knpoly/errors.hpp"

namespace knpoly {
namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 12> kFamilyNames{{
    {FamilyId::Tutte, "tutte"},
    {FamilyId::GenMatching, "gen-matching"},
    {FamilyId::DefectMatching, "defect-matching"},
    {FamilyId::BivariateMatching, "matching"},
    {FamilyId::Xi, "xi"},
    {FamilyId::SubgraphCounting, "subgraph"},
    {FamilyId::CoveredComponents, "covered"},
    {FamilyId::Independence, "independence"},
    {FamilyId::Clique, "clique"},
    {FamilyId::Chromatic, "chromatic"},
    {FamilyId::Domination, "domination"},
    {FamilyId::Interlace, "interlace"},
}};

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": n must be nonnegative");
}

void require_budget(int n, int budget, const char* what) {
  if (n > budget) {
    throw BudgetExceeded(std::string(what) + ": n=" + std::to_string(n) +
                         " exceeds symbolic budget " + std::to_string(budget));
  }
}

// (1+v)^(k choose 2) for k = 0..max_k
template <class T>
std::vector<T> all_graph_weights(int max_k, const T& v) {
  std::vector<T> g(max_k + 1);
  const T base = T(1) + v;
  T step(1);  // base^(k-1)
  g[0] = T(1);
  for (int k = 1; k <= max_k; ++k) {
    g[k] = g[k - 1] * step;
    step = step * base;
  }
  return g;
}

template <class T>
std::vector<T> connected_weights_impl(int max_k, const T& v) {
  PascalTable binom(std::max(max_k, 1));
  const auto g = all_graph_weights(max_k, v);
  std::vector<T> c(max_k + 1, T(0));
  for (int k = 1; k <= max_k; ++k) {
    T rest(0);
    for (int j = 1; j < k; ++j) rest += T(binom(k - 1, j - 1)) * c[j] * g[k - j];
    c[k] = g[k] - rest;
  }
  return c;
}

// P_m = sum_{k=1..m} binom(m-1, k-1) w_k P_{m-k}, P_0 = 1, for block
// weights w_1..w_N. Returns P_0..P_N.
template <class T>
std::vector<T> block_convolution(const std::vector<T>& weights, int max_n) {
  PascalTable binom(std::max(max_n, 1));
  std::vector<T> p(max_n + 1, T(0));
  p[0] = T(1);
  for (int m = 1; m <= max_n; ++m) {
    T sum(0);
    for (int k = 1; k <= m; ++k) sum += T(binom(m - 1, k - 1)) * weights[k] * p[m - k];
    p[m] = sum;
  }
  return p;
}

// Same convolution reduced mod mu, with the connected weights c_k(v)
// computed alongside. Pascal rows are streamed, so memory is O(N).
std::vector<std::uint64_t> block_convolution_mod(
    int max_n, std::uint64_t v, const ModArith& ring,
    const std::function<std::uint64_t(int, std::uint64_t)>& block_weight) {
  const std::uint64_t mu = ring.modulus();
  const bool lazy = mu < (std::uint64_t{1} << 32);
  std::vector<std::uint64_t> g(max_n + 1), c(max_n + 1, 0), w(max_n + 1, 0), p(max_n + 1, 0);
  const std::uint64_t base = ring.add(1 % mu, v);
  std::uint64_t step = 1 % mu;
  g[0] = 1 % mu;
  for (int k = 1; k <= max_n; ++k) {
    g[k] = ring.mul(g[k - 1], step);
    step = ring.mul(step, base);
  }
  p[0] = 1 % mu;
  PascalRowMod row(ring);  // row k-1 while computing step k
  for (int k = 1; k <= max_n; ++k) {
    const auto& r = row.row();
    if (lazy) {
      unsigned __int128 acc_c = 0, acc_p = 0;
      for (int j = 1; j < k; ++j) {
        acc_c += static_cast<unsigned __int128>((r[j - 1] * c[j]) % mu) * g[k - j];
      }
      c[k] = ring.sub(g[k], static_cast<std::uint64_t>(acc_c % mu));
      w[k] = block_weight(k, c[k]);
      for (int j = 1; j <= k; ++j) {
        acc_p += static_cast<unsigned __int128>((r[j - 1] * w[j]) % mu) * p[k - j];
      }
      p[k] = static_cast<std::uint64_t>(acc_p % mu);
    } else {
      std::uint64_t acc_c = 0, acc_p = 0;
      for (int j = 1; j < k; ++j) acc_c = ring.add(acc_c, ring.mul(ring.mul(r[j - 1], c[j]), g[k - j]));
      c[k] = ring.sub(g[k], acc_c);
      w[k] = block_weight(k, c[k]);
      for (int j = 1; j <= k; ++j) acc_p = ring.add(acc_p, ring.mul(ring.mul(r[j - 1], w[j]), p[k - j]));
      p[k] = acc_p;
    }
    row.advance();
  }
  return p;
}

// [v^(k-1)] c_k(v) for k = 1..N: the nullity generating function of connected
// spanning subgraphs at nullity 0, computed on power series truncated at v^N.
std::vector<BigInt> tree_weights_by_series(int max_k) {
  const int len = std::max(max_k, 1);
  PascalTable binom(len);
  auto truncated_power = [len](long top) {
    // coefficients of (1+v)^top below v^len
    std::vector<BigInt> s(len, 0);
    BigInt coef = 1;
    for (int i = 0; i < len && i <= top; ++i) {
      s[i] = coef;
      coef = exact_div(BigInt(coef * (top - i)), BigInt(i + 1));
    }
    return s;
  };
  auto mul_trunc = [len](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    std::vector<BigInt> out(len, 0);
    for (int i = 0; i < len; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; i + j < len; ++j) {
        if (y[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
      }
    }
    return out;
  };
  std::vector<std::vector<BigInt>> g(max_k + 1), c(max_k + 1);
  for (int k = 0; k <= max_k; ++k) g[k] = truncated_power(static_cast<long>(k) * (k - 1) / 2);
  std::vector<BigInt> trees(max_k + 1, 0);
  for (int k = 1; k <= max_k; ++k) {
    c[k] = g[k];
    for (int j = 1; j < k; ++j) {
      auto term = mul_trunc(c[j], g[k - j]);
      for (int i = 0; i < len; ++i) c[k][i] -= binom(k - 1, j - 1) * term[i];
    }
    trees[k] = c[k][k - 1];
  }
  return trees;
}

std::uint64_t residue_of(std::int64_t x, const ModArith& ring) { return ring.reduce(x); }

std::int64_t small_residue(const BigInt& x, std::uint64_t mu) {
  return static_cast<std::int64_t>(mod_reduce(x, mu));
}

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& [fid, name] : kFamilyNames) {
    if (fid == id) return name;
  }
  return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& [fid, fname] : kFamilyNames) {
    if (fname == name) return fid;
  }
  if (name == "c") return FamilyId::CoveredComponents;
  if (name == "s") return FamilyId::SubgraphCounting;
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> all = [] {
    std::vector<FamilyId> out;
    for (const auto& [fid, name] : kFamilyNames) out.push_back(fid);
    return out;
  }();
  return all;
}

std::vector<BigInt> connected_weights(int max_k, const BigInt& v) {
  if (max_k < 1) throw InvalidArgument("connected_weights: N must be at least 1");
  return connected_weights_impl(max_k, v);
}

std::vector<LaurentPoly> connected_weights(int max_k, const LaurentPoly& v) {
  if (max_k < 1) throw InvalidArgument("connected_weights: N must be at least 1");
  return connected_weights_impl(max_k, v);
}

std::vector<BigInt> z_partition_sequence(int max_n, const BigInt& q, const BigInt& v) {
  require_nonnegative(max_n, "z_partition");
  if (max_n == 0) return {BigInt(1)};
  auto c = connected_weights(max_n, v);
  for (auto& ck : c) ck *= q;
  return block_convolution(c, max_n);
}

BigInt z_partition(int n, const BigInt& q, const BigInt& v) {
  return z_partition_sequence(n, q, v).back();
}

LaurentPoly z_partition(int n, const LaurentPoly& q, const LaurentPoly& v) {
  require_nonnegative(n, "z_partition");
  if (n == 0) return LaurentPoly(1);
  auto c = connected_weights(n, v);
  for (auto& ck : c) ck = ck * q;
  return block_convolution(c, n).back();
}

BigInt f_ab(int n, const BigInt& a, const BigInt& b) {
  if (n < 1) throw InvalidArgument("f_ab: n must be at least 1");
  return z_partition(n, BigInt((a - 1) * (b - 1)), BigInt(b - 1));
}

LaurentPoly tutte_complete_symbolic(int n, int budget) {
  if (n < 1) throw InvalidArgument("tutte_complete_symbolic: n must be at least 1");
  require_budget(n, budget, "tutte_complete_symbolic");
  const auto x1 = LaurentPoly::variable("X") - 1;
  const auto y1 = LaurentPoly::variable("Y") - 1;
  LaurentPoly z = z_partition(n, x1 * y1, y1);
  try {
    return poly_div_exact(z, y1.pow(static_cast<unsigned>(n)) * x1);
  } catch (const NotDivisible& e) {
    throw std::logic_error(std::string("tutte_complete_symbolic: random cluster sum not "
                                       "divisible, engine defect: ") +
                           e.what());
  }
}

std::vector<BigInt> tutte_complete_sequence(int max_n, const BigInt& a, const BigInt& b) {
  if (max_n < 1) throw InvalidArgument("tutte_complete_sequence: N must be at least 1");
  const BigInt u = b - 1;
  const BigInt w = a - 1;
  std::vector<BigInt> t(max_n + 1, 0);
  if (u != 0) {
    auto c = connected_weights(max_n, u);
    BigInt scale = 1;
    for (int k = 1; k <= max_n; ++k) {
      t[k] = exact_div(c[k], scale);
      scale *= u;
    }
  } else {
    t = tree_weights_by_series(max_n);
  }
  PascalTable binom(max_n);
  std::vector<BigInt> tutte(max_n + 1, 0), rest(max_n + 1, 0);
  rest[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += binom(n - 1, k - 1) * t[k] * rest[n - k];
    tutte[n] = sum;
    rest[n] = w * sum;
  }
  return {tutte.begin() + 1, tutte.end()};
}

BigInt tutte_complete_eval(int n, const BigInt& a, const BigInt& b) {
  if (n < 1) throw InvalidArgument("tutte_complete_eval: n must be at least 1");
  if (a != 1 && b != 1) {
    BigInt divisor = ipow(BigInt(b - 1), static_cast<unsigned long>(n)) * (a - 1);
    return exact_div(f_ab(n, a, b), divisor);
  }
  return tutte_complete_sequence(n, a, b).back();
}

std::vector<std::uint64_t> tutte_mod_sequence_fast(int max_n, std::int64_t a, std::int64_t b,
                                                   std::uint64_t mu) {
  if (max_n < 1) throw InvalidArgument("tutte_mod_sequence: N must be at least 1");
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  const ModArith ring(mu);
  const std::uint64_t w = ring.sub(residue_of(a, ring), 1 % mu);
  const std::uint64_t u = ring.sub(residue_of(b, ring), 1 % mu);
  auto inv_w = ring.inverse(w);
  auto inv_u = ring.inverse(u);
  if (!inv_w || !inv_u) {
    throw InvalidArgument("fast modular Tutte path needs gcd(a-1,mu) = gcd(b-1,mu) = 1");
  }
  const std::uint64_t q = ring.mul(w, u);
  auto z = block_convolution_mod(max_n, u, ring,
                                 [&](int, std::uint64_t ck) { return ring.mul(q, ck); });
  std::vector<std::uint64_t> out(max_n);
  std::uint64_t scale = *inv_w;  // (u^n w)^-1
  for (int n = 1; n <= max_n; ++n) {
    scale = ring.mul(scale, *inv_u);
    out[n - 1] = ring.mul(z[n], scale);
  }
  return out;
}

std::vector<std::uint64_t> tutte_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                              std::uint64_t mu) {
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  if (gcd_signed(a - 1, mu) == 1 && gcd_signed(b - 1, mu) == 1) {
    return tutte_mod_sequence_fast(max_n, a, b, mu);
  }
  auto exact = tutte_complete_sequence(max_n, a, b);
  std::vector<std::uint64_t> out;
  out.reserve(exact.size());
  for (const auto& x : exact) out.push_back(mod_reduce(x, mu));
  return out;
}

std::uint64_t tutte_complete_eval_mod(int n, const BigInt& a, const BigInt& b, std::uint64_t mu) {
  if (n < 1) throw InvalidArgument("tutte_complete_eval_mod: n must be at least 1");
  if (mu < 2) throw InvalidArgument("modulus must be at least 2");
  const std::int64_t ra = small_residue(a, mu);
  const std::int64_t rb = small_residue(b, mu);
  if (gcd_signed(ra - 1, mu) == 1 && gcd_signed(rb - 1, mu) == 1) {
    return tutte_mod_sequence_fast(n, ra, rb, mu).back();
  }
  return mod_reduce(tutte_complete_eval(n, a, b), mu);
}

GesselPakResult gessel_pak(int n, const BigInt& a, const BigInt& b, GesselPakBase base) {
  require_nonnegative(n, "gessel_pak");
  const BigInt base_value = base == GesselPakBase::One ? 1 : 0;
  PascalTable binom(std::max(n, 1));
  // prefix[k] = sum_{i=1}^{k-1} b^i
  std::vector<BigInt> prefix(n + 2, 0);
  for (int k = 2; k <= n + 1; ++k) prefix[k] = prefix[k - 1] + ipow(b, k - 1);

  auto evaluate = [&](const std::vector<BigInt>& inner_one, const std::vector<BigInt>& inner_a,
                      const BigInt& x, int m) {
    BigInt sum = 0;
    for (int k = 1; k <= m; ++k) {
      sum += binom(m - 1, k - 1) * (x + prefix[k]) * inner_one[k - 1] * inner_a[m - k];
    }
    return sum;
  };

  std::vector<BigInt> rec_one(n + 1), rec_a(n + 1);
  rec_one[0] = rec_a[0] = base_value;
  for (int m = 1; m <= n; ++m) {
    rec_one[m] = evaluate(rec_one, rec_one, BigInt(1), m);
    rec_a[m] = evaluate(rec_one, rec_a, a, m);
  }

  GesselPakResult out;
  out.n = n;
  out.a = a;
  out.b = b;
  out.base = base;
  out.recursive = rec_a[n];
  if (n == 0) {
    out.one_step = base_value;
    out.oracle = base_value;
  } else {
    std::vector<BigInt> true_one(n + 1), true_a(n + 1);
    true_one[0] = true_a[0] = base_value;
    for (int m = 1; m <= n; ++m) {
      true_one[m] = tutte_complete_eval(m, 1, b);
      true_a[m] = tutte_complete_eval(m, a, b);
    }
    out.one_step = evaluate(true_one, true_a, a, n);
    out.oracle = true_a[n];
  }
  out.agrees = out.recursive == out.oracle;
  return out;
}

std::vector<BigInt> matching_complete(int n) {
  require_nonnegative(n, "matching_complete");
  // table[m][k] = m_k(K_m); vertex m is either unmatched or matched to one of m-1
  std::vector<std::vector<BigInt>> table(n + 1);
  for (int m = 0; m <= n; ++m) {
    table[m].assign(m / 2 + 1, 0);
    for (int k = 0; k <= m / 2; ++k) {
      if (m == 0 || k == 0) {
        table[m][k] = 1;
        continue;
      }
      BigInt value = (k <= (m - 1) / 2) ? table[m - 1][k] : BigInt(0);
      if (m >= 2 && k - 1 <= (m - 2) / 2) value += (m - 1) * table[m - 2][k - 1];
      table[m][k] = value;
    }
  }
  return table[n];
}

BigInt matching_family_eval(int n, MatchingKind which, const BigInt& a, const BigInt& b) {
  const auto m = matching_complete(n);
  BigInt sum = 0;
  for (int k = 0; k < static_cast<int>(m.size()); ++k) {
    switch (which) {
      case MatchingKind::Generating:
        sum += m[k] * ipow(a, k);
        break;
      case MatchingKind::Defect:
        sum += (k % 2 ? -1 : 1) * m[k] * ipow(a, n - 2 * k);
        break;
      case MatchingKind::Bivariate:
        sum += ipow(a, k) * m[k] * ipow(b, n - 2 * k);
        break;
    }
  }
  return sum;
}

std::vector<std::uint64_t> bivariate_matching_mod_sequence(int max_n, std::int64_t a,
                                                           std::int64_t b, std::uint64_t mu) {
  require_nonnegative(max_n, "bivariate_matching_mod_sequence");
  const ModArith ring(mu);
  const std::uint64_t ra = ring.reduce(a), rb = ring.reduce(b);
  std::vector<std::uint64_t> out(max_n + 1);
  out[0] = 1 % mu;
  if (max_n >= 1) out[1] = rb;
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t pairs = ring.mul(ra, ring.reduce(static_cast<std::int64_t>(n - 1)));
    out[n] = ring.add(ring.mul(rb, out[n - 1]), ring.mul(pairs, out[n - 2]));
  }
  return out;
}

LaurentPoly hermite_poly(int n) {
  require_nonnegative(n, "hermite_poly");
  std::vector<BigInt> prev{1}, cur{0, 1};
  if (n == 0) return LaurentPoly::univariate(prev, "X");
  for (int k = 1; k < n; ++k) {
    // He_{k+1} = X He_k - k He_{k-1}
    std::vector<BigInt> next(k + 2, 0);
    for (int i = 0; i <= k; ++i) next[i + 1] += cur[i];
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) next[i] -= k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return LaurentPoly::univariate(cur, "X");
}

std::vector<std::uint64_t> hermite_mod_sequence(int max_n, std::int64_t a, std::uint64_t mu) {
  require_nonnegative(max_n, "hermite_mod_sequence");
  const ModArith ring(mu);
  const std::uint64_t ra = ring.reduce(a);
  std::vector<std::uint64_t> out(max_n + 1);
  out[0] = 1 % mu;
  if (max_n >= 1) out[1] = ra;
  for (int k = 1; k < max_n; ++k) {
    out[k + 1] = ring.sub(ring.mul(ra, out[k]),
                          ring.mul(ring.reduce(static_cast<std::int64_t>(k)), out[k - 1]));
  }
  return out;
}

LaurentPoly c_complete(int n, int budget) {
  require_nonnegative(n, "c_complete");
  require_budget(n, budget, "c_complete");
  if (n == 0) return LaurentPoly(1);
  const auto X = LaurentPoly::variable("X");
  const auto Z = LaurentPoly::variable("Z");
  auto weights = connected_weights(n, LaurentPoly::variable("Y"));
  weights[1] = X;
  for (int k = 2; k <= n; ++k) weights[k] = X * Z * weights[k];
  return block_convolution(weights, n).back();
}

BigInt c_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c) {
  require_nonnegative(n, "c_complete_eval");
  if (n == 0) return 1;
  auto weights = connected_weights(n, b);
  weights[1] = a;
  for (int k = 2; k <= n; ++k) weights[k] *= a * c;
  return block_convolution(weights, n).back();
}

std::vector<std::uint64_t> c_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                   std::int64_t c, std::uint64_t mu) {
  require_nonnegative(max_n, "c_complete_mod_sequence");
  const ModArith ring(mu);
  const std::uint64_t ra = ring.reduce(a), ac = ring.mul(ra, ring.reduce(c));
  return block_convolution_mod(max_n, ring.reduce(b), ring, [&](int k, std::uint64_t ck) {
    return k == 1 ? ra : ring.mul(ac, ck);
  });
}

LaurentPoly s_complete(int n, int budget) {
  require_nonnegative(n, "s_complete");
  require_budget(n, budget, "s_complete");
  if (n == 0) return LaurentPoly(1);
  const auto X = LaurentPoly::variable("X");
  const auto Y = LaurentPoly::variable("Y");
  auto weights = connected_weights(n, LaurentPoly::variable("Z"));
  for (auto& wk : weights) wk = Y * wk;
  auto z = block_convolution(weights, n);
  PascalTable binom(n);
  LaurentPoly sum;
  for (int w = 0; w <= n; ++w) {
    sum += LaurentPoly(binom(n, w)) * X.pow(static_cast<unsigned>(w)) * z[w];
  }
  return sum;
}

BigInt s_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c) {
  require_nonnegative(n, "s_complete_eval");
  auto z = z_partition_sequence(n, b, c);
  PascalTable binom(std::max(n, 1));
  BigInt sum = 0;
  for (int w = 0; w <= n; ++w) sum += binom(n, w) * ipow(a, w) * z[w];
  return sum;
}

std::vector<std::uint64_t> s_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                   std::int64_t c, std::uint64_t mu) {
  require_nonnegative(max_n, "s_complete_mod_sequence");
  const ModArith ring(mu);
  const std::uint64_t ra = ring.reduce(a), rb = ring.reduce(b);
  auto z = block_convolution_mod(max_n, ring.reduce(c), ring,
                                 [&](int, std::uint64_t ck) { return ring.mul(rb, ck); });
  std::vector<std::uint64_t> a_pow(max_n + 1);
  a_pow[0] = 1 % mu;
  for (int w = 1; w <= max_n; ++w) a_pow[w] = ring.mul(a_pow[w - 1], ra);
  std::vector<std::uint64_t> out(max_n + 1);
  PascalRowMod row(ring);
  for (int n = 0; n <= max_n; ++n) {
    const auto& r = row.row();
    std::uint64_t sum = 0;
    for (int w = 0; w <= n; ++w) sum = ring.add(sum, ring.mul(ring.mul(r[w], a_pow[w]), z[w]));
    out[n] = sum;
    row.advance();
  }
  return out;
}

BigInt xi_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a == 0 || b == 0) throw ZeroVariable("xi_complete_eval: a and b must be nonzero");
  const BigInt ab = a * b;
  if (!mpz_divisible_p(c.get_mpz_t(), ab.get_mpz_t())) {
    throw DivisibilityViolation("xi_complete_eval: ab = " + ab.get_str() +
                                " does not divide c = " + c.get_str());
  }
  return c_complete_eval(n, a, b, BigInt(exact_div(c, ab) + 1));
}

LaurentPoly xi_complete_symbolic(int n, int budget) {
  const auto X = LaurentPoly::variable("X");
  const auto Y = LaurentPoly::variable("Y");
  const auto Z = LaurentPoly::variable("Z");
  const auto replacement = LaurentPoly::monomial(1, {{"X", -1}, {"Y", -1}, {"Z", 1}}) + 1;
  return poly_substitute(c_complete(n, budget), "Z", replacement);
}

std::vector<std::uint64_t> xi_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                    std::int64_t c, std::uint64_t mu) {
  if (a == 0 || b == 0) throw ZeroVariable("xi: a and b must be nonzero");
  const std::int64_t ab = a * b;
  if (c % ab != 0) {
    throw DivisibilityViolation("xi: ab = " + std::to_string(ab) + " does not divide c = " +
                                std::to_string(c));
  }
  return c_complete_mod_sequence(max_n, a, b, c / ab + 1, mu);
}

BigInt simple_closed_form(FamilyId family, int n, const BigInt& b) {
  require_nonnegative(n, "simple_closed_form");
  switch (family) {
    case FamilyId::Independence:
      return n * b + 1;
    case FamilyId::Clique:
      return ipow(BigInt(b + 1), static_cast<unsigned long>(n));
    case FamilyId::Chromatic: {
      BigInt value = 1;
      for (int i = 0; i < n; ++i) value *= b - i;
      return value;
    }
    case FamilyId::Domination: {
      if (n < 1) throw InvalidArgument("domination: n must be at least 1");
      BigInt d = b;
      for (int m = 1; m < n; ++m) d = d * (b + 1) + b;
      return d;
    }
    case FamilyId::Interlace:
      if (n < 1) throw InvalidArgument("interlace: n must be at least 1");
      return ipow(BigInt(2), static_cast<unsigned long>(n - 1)) * b;
    default:
      throw InvalidArgument("simple_closed_form: family " + std::string(family_name(family)) +
                            " has no closed form here");
  }
}

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("totient: m must be positive");
  std::uint64_t result = m;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

}  // namespace knpoly
