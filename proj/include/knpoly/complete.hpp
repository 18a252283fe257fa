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
#include <string_view>
#include <vector>

#include "knpoly/bigint.hpp"
#include "knpoly/laurent.hpp"

// Exact graph polynomials of complete graphs.
//
// Everything here reduces to one labeled-component convolution. Write
// c_k(v) for the sum over connected spanning subgraphs of K_k of v^|A|.
// Since every graph on [k] is a set of components, the total
// g_k = (1+v)^(k choose 2) satisfies
//
//     g_k = sum_{j=1..k} binom(k-1, j-1) c_j g_{k-j},
//
// choosing the component of vertex 1. The same split gives the random
// cluster sum Z_n(q, v) = sum_A q^kappa(A) v^|A| over subsets of E(K_n):
//
//     Z_n = sum_{k=1..n} binom(n-1, k-1) q c_k Z_{n-k},   Z_0 = 1.
//
// The Tutte polynomial follows from Z_n with q = (X-1)(Y-1), v = Y-1 after
// dividing by (Y-1)^n (X-1). The covered components and subgraph counting
// polynomials use the same convolution with different block weights.
namespace knpoly {

enum class FamilyId {
  Tutte,
  GenMatching,
  DefectMatching,
  BivariateMatching,
  Xi,
  SubgraphCounting,
  CoveredComponents,
  Independence,
  Clique,
  Chromatic,
  Domination,
  Interlace,
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
const std::vector<FamilyId>& all_families();

struct SymbolicBudget {
  int tutte = 16;
  int trivariate = 12;
};

// ---- connected weights and the random cluster sum --------------------------

/// c_0..c_N (c_0 = 0) for an integer edge weight v.
std::vector<BigInt> connected_weights(int max_k, const BigInt& v);
/// Same with v a polynomial.
std::vector<LaurentPoly> connected_weights(int max_k, const LaurentPoly& v);

/// Z_0..Z_N for integer q, v.
std::vector<BigInt> z_partition_sequence(int max_n, const BigInt& q, const BigInt& v);
BigInt z_partition(int n, const BigInt& q, const BigInt& v);
LaurentPoly z_partition(int n, const LaurentPoly& q, const LaurentPoly& v);

// ---- Tutte ------------------------------------------------------------------

/// f_{a,b}(n) = (b-1)^n (a-1) T(K_n;a,b) = Z_n((a-1)(b-1), b-1).
BigInt f_ab(int n, const BigInt& a, const BigInt& b);

/// T(K_n;X,Y) as a polynomial. Throws BudgetExceeded past budget.
LaurentPoly tutte_complete_symbolic(int n, int budget = SymbolicBudget{}.tutte);

/// T(K_n;a,b) exactly. When a != 1 and b != 1 this is f_ab divided by
/// (b-1)^n (a-1); otherwise the nullity convolution below is used.
BigInt tutte_complete_eval(int n, const BigInt& a, const BigInt& b);

/// T(K_1..K_N; a, b) through the division-free nullity convolution
///   T_n = sum_k binom(n-1,k-1) t_k W_{n-k},  W_0 = 1,  W_m = (a-1) T_m,
/// where t_k = T(K_k;1,b) is the nullity generating function of connected
/// spanning subgraphs of K_k. Valid for every integer a, b.
std::vector<BigInt> tutte_complete_sequence(int max_n, const BigInt& a, const BigInt& b);

/// T(K_n;a,b) mod mu. Uses all-modular arithmetic when gcd(a-1,mu) and
/// gcd(b-1,mu) are both 1, exact arithmetic otherwise.
std::uint64_t tutte_complete_eval_mod(int n, const BigInt& a, const BigInt& b, std::uint64_t mu);

/// T(K_n;a,b) mod mu for n = 1..N in O(N^2) ring operations. Requires the
/// gcd conditions above; throws InvalidArgument otherwise.
std::vector<std::uint64_t> tutte_mod_sequence_fast(int max_n, std::int64_t a, std::int64_t b,
                                                   std::uint64_t mu);
/// n = 1..N; picks the fast path when allowed, else reduces exact values.
std::vector<std::uint64_t> tutte_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                              std::uint64_t mu);

enum class GesselPakBase { One, Zero };

struct GesselPakResult {
  int n = 0;
  BigInt a, b;
  GesselPakBase base = GesselPakBase::One;
  BigInt recursive;  // recurrence applied all the way down, including T(K_{k-1};1,b)
  BigInt one_step;   // right-hand side with true values for the inner T factors
  BigInt oracle;     // T(K_n;a,b); for n = 0 the base value
  bool agrees = false;  // recursive == oracle
};

/// Evaluates the recurrence
///   T_n(a,b) = sum_k binom(n-1,k-1) (a + sum_{i=1}^{k-1} b^i) T_{k-1}(1,b) T_{n-k}(a,b)
/// exactly as written, and reports how it compares to the true value.
GesselPakResult gessel_pak(int n, const BigInt& a, const BigInt& b, GesselPakBase base);

// ---- matchings ----------------------------------------------------------------

/// m_k(K_n) for k = 0..floor(n/2).
std::vector<BigInt> matching_complete(int n);

enum class MatchingKind { Generating, Defect, Bivariate };

/// M(K_n;a), alpha(K_n;a) or Mbar(K_n;a,b); b is ignored except for Mbar.
BigInt matching_family_eval(int n, MatchingKind which, const BigInt& a, const BigInt& b = 1);

/// Mbar(K_n;a,b) mod mu for n = 0..N via Mbar_n = b Mbar_{n-1} + a (n-1) Mbar_{n-2}.
std::vector<std::uint64_t> bivariate_matching_mod_sequence(int max_n, std::int64_t a,
                                                           std::int64_t b, std::uint64_t mu);

/// Probabilists' Hermite polynomial He_n(X).
LaurentPoly hermite_poly(int n);
/// He_n(a) mod mu for n = 0..N.
std::vector<std::uint64_t> hermite_mod_sequence(int max_n, std::int64_t a, std::uint64_t mu);

// ---- trivariate family --------------------------------------------------------

/// C(K_n;X,Y,Z): blocks of size 1 weigh X, larger blocks X Z c_k(Y).
LaurentPoly c_complete(int n, int budget = SymbolicBudget{}.trivariate);
BigInt c_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c);
/// n = 0..N
std::vector<std::uint64_t> c_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                   std::int64_t c, std::uint64_t mu);

/// S(K_n;X,Y,Z) = sum_w binom(n,w) X^w Z_w(q=Y, v=Z).
LaurentPoly s_complete(int n, int budget = SymbolicBudget{}.trivariate);
BigInt s_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c);
/// n = 0..N
std::vector<std::uint64_t> s_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                   std::int64_t c, std::uint64_t mu);

/// xi(K_n;a,b,c) = C(K_n;a,b,c/(ab)+1). Throws ZeroVariable when a or b is
/// zero and DivisibilityViolation when ab does not divide c.
BigInt xi_complete_eval(int n, const BigInt& a, const BigInt& b, const BigInt& c);
/// xi(K_n;X,Y,Z) from c_complete by Z -> Z/(XY) + 1.
LaurentPoly xi_complete_symbolic(int n, int budget = SymbolicBudget{}.trivariate);
/// n = 0..N, same preconditions as xi_complete_eval.
std::vector<std::uint64_t> xi_complete_mod_sequence(int max_n, std::int64_t a, std::int64_t b,
                                                    std::int64_t c, std::uint64_t mu);

// ---- closed forms ---------------------------------------------------------------

/// Independence nb+1, clique (b+1)^n, chromatic b(b-1)...(b-n+1),
/// domination via D(K_{n+1}) = D(K_n)(b+1) + b from D(K_1) = b, and
/// interlace 2^(n-1) b. Domination and interlace need n >= 1.
BigInt simple_closed_form(FamilyId family, int n, const BigInt& b);

std::uint64_t totient(std::uint64_t m);

}  // namespace knpoly
