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

#include <array>
#include <cstdint>
#include <vector>

#include "knpoly/bigint.hpp"
#include "knpoly/graph.hpp"
#include "knpoly/laurent.hpp"

// Definition-level sums over edge subsets, vertex subsets and disjoint
// subset pairs. Every fast path in the library is checked against these.
namespace knpoly::brute {

/// T(G;X,Y) = sum over A of (X-1)^(kappa(A)-kappa(G)) (Y-1)^(|A|+kappa(A)-n).
LaurentPoly tutte(const SmallGraph& g, int max_edges = EnumerationBudget{}.max_edges_subsets);

enum class XiPairs {
  VertexDisjoint,  // no vertex of A is a vertex of B
  EdgeDisjoint,    // only A and B share no edge
};

/// xi(G;X,Y,Z) = sum over pairs (A,B) of
/// X^(kappa(A|B)-c(B)) Y^(|A|+|B|-c(B)) Z^c(B).
/// With vertex-disjoint pairs every exponent is nonnegative and the identity
/// C(X,Y,Z) = xi(X,Y,XYZ-XY) holds. Edge-disjoint pairs break that identity
/// from K_3 on and can give a negative X exponent (K_4, B a perfect
/// matching, A an edge joining its two edges).
LaurentPoly xi(const SmallGraph& g, int max_edges = EnumerationBudget{}.max_edges_pairs,
               XiPairs pairs = XiPairs::VertexDisjoint);

/// S(G;X,Y,Z) = sum over subgraphs H=(W,F) of X^|W| Y^kappa(H) Z^|F|.
/// `max_terms` bounds sum_W 2^|E[W]|.
LaurentPoly subgraph_counting(const SmallGraph& g, std::uint64_t max_terms = 1ull << 28);

/// C(G;X,Y,Z) = sum over A of X^kappa(A) Y^|A| Z^c(A).
LaurentPoly covered_components(const SmallGraph& g,
                               int max_edges = EnumerationBudget{}.max_edges_subsets);

/// m_k: number of k-edge matchings, k = 0..max.
std::vector<BigInt> matching_counts(const SmallGraph& g,
                                    int max_edges = EnumerationBudget{}.max_edges_subsets);

/// d_k: number of dominating vertex sets of size k, k = 0..n. Requires n <= 20.
std::vector<BigInt> dominating_counts(const SmallGraph& g);

/// Independent vertex sets by size, k = 0..n. Requires n <= 20.
std::vector<BigInt> independent_set_counts(const SmallGraph& g);

/// Cliques (including the empty set) by size, k = 0..n. Requires n <= 20.
std::vector<BigInt> clique_counts(const SmallGraph& g);

/// Proper colourings with colours {0..b-1}, by trying all b^n maps.
/// Requires b^n <= 2^24.
BigInt proper_colorings(const SmallGraph& g, int b);

/// Labeled d-regular simple graphs on n vertices, by scanning all 2^(n choose 2)
/// graphs. Requires n <= 7.
BigInt regular_count(int n, int d);

/// Sum over A of [A connected spanning] v^|A|, as coefficients in v.
std::vector<BigInt> connected_spanning_by_size(const SmallGraph& g,
                                               int max_edges = EnumerationBudget{}.max_edges_subsets);

struct TrinksPoint {
  BigInt a, b, c;
  BigInt xi_value;         // xi(G;a,b,c)
  BigInt covered_value;    // C(G;a,b,c/(ab)+1)
  bool pass = false;
};

struct TrinksReport {
  bool symbolic_pass = false;   // xi(G;X,Y,XYZ-XY) == C(G;X,Y,Z)
  LaurentPoly substituted;      // left-hand side of that comparison
  LaurentPoly covered;          // C(G;X,Y,Z)
  std::vector<TrinksPoint> points;
  bool pass() const;
};

/// Checks C = xi(X,Y,XYZ-XY) symbolically and xi(a,b,c) = C(a,b,c/(ab)+1)
/// at every given point; points with ab not dividing c are skipped.
TrinksReport verify_trinks(const SmallGraph& g,
                           const std::vector<std::array<long, 3>>& points,
                           int max_edges_pairs = EnumerationBudget{}.max_edges_pairs);

}  // namespace knpoly::brute
