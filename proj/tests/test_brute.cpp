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


#include "knpoly/brute.hpp"
#include "knpoly/errors.hpp"
#include "util.hpp"

using namespace knpoly;
using namespace testutil;

namespace {
std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("tutte oracle") {
  CHECK(brute::tutte(complete_graph(1)) == LaurentPoly(1));
  CHECK(brute::tutte(complete_graph(2)) == X());
  CHECK(brute::tutte(complete_graph(3)) == X() * X() + X() + Y());
  // K_5 expanded independently from the rank-nullity sum
  auto t5 = X().pow(4) + 6 * X().pow(3) + 10 * X().pow(2) * Y() + 11 * X().pow(2) +
            5 * X() * Y().pow(3) + 15 * X() * Y().pow(2) + 20 * X() * Y() + 6 * X() + Y().pow(6) +
            4 * Y().pow(5) + 10 * Y().pow(4) + 15 * Y().pow(3) + 15 * Y().pow(2) + 6 * Y();
  CHECK(brute::tutte(complete_graph(5)) == t5);
  CHECK_THROWS_AS(brute::tutte(complete_graph(5), 9), BudgetExceeded);
}

TEST_CASE("tutte oracle counts trees, forests and connected subgraphs") {
  CHECK(at(brute::tutte(complete_graph(4)), 1, 1) == 16);
  for (int n = 1; n <= 5; ++n) {
    auto g = complete_graph(n);
    auto t = brute::tutte(g);
    long forests = 0, connected = 0, trees = 0;
    edge_subsets(g, [&](EdgeSubset a) {
      const int k = component_count(g, a);
      const bool acyclic = a.size() + k == n;
      forests += acyclic;
      connected += k == 1;
      trees += acyclic && k == 1;
    });
    CHECK(at(t, 2, 1) == forests);
    CHECK(at(t, 1, 2) == connected);
    CHECK(at(t, 1, 1) == trees);
    for (const auto& [e, c] : t.terms()) {
      CHECK(c > 0);
      for (int x : e) CHECK(x >= 0);
    }
  }
}

TEST_CASE("xi oracle") {
  CHECK(brute::xi(complete_graph(1)) == X());
  CHECK(brute::xi(edgeless_graph(4)) == X().pow(4));
  CHECK(brute::xi(complete_graph(2)) == X() * X() + X() * Y() + Z());
  auto xi3 = X().pow(3) + 3 * X().pow(2) * Y() + X() * Y().pow(3) + 3 * X() * Y().pow(2) +
             3 * X() * Z() + Y().pow(2) * Z() + 3 * Y() * Z();
  CHECK(brute::xi(complete_graph(3)) == xi3);
  CHECK(at(brute::xi(complete_graph(4)), 2, 3, 12) == 27016);
}

TEST_CASE("edge-disjoint pairs break the Trinks identity on K_3") {
  auto g = complete_graph(2);
  CHECK(brute::xi(g, 15, brute::XiPairs::EdgeDisjoint) == brute::xi(g));
  auto k3 = complete_graph(3);
  auto edge_disjoint = brute::xi(k3, 15, brute::XiPairs::EdgeDisjoint);
  auto lhs = poly_substitute(edge_disjoint, "Z", X() * Y() * Z() - X() * Y());
  CHECK(lhs != brute::covered_components(k3));
  auto rhs = poly_substitute(brute::xi(k3), "Z", X() * Y() * Z() - X() * Y());
  CHECK(rhs == brute::covered_components(k3));
}

TEST_CASE("subgraph counting oracle") {
  CHECK(brute::subgraph_counting(complete_graph(0)) == LaurentPoly(1));
  CHECK(brute::subgraph_counting(complete_graph(1)) == 1 + X() * Y());
  CHECK(brute::subgraph_counting(complete_graph(2)) ==
        1 + 2 * X() * Y() + X() * X() * Y() * Y() + X() * X() * Y() * Z());
  // sum over W of 2^C(|W|,2): 1 + 4 + 6*2 + 4*8 + 64
  CHECK(at(brute::subgraph_counting(complete_graph(4)), 1, 1, 1) == 113);
}

TEST_CASE("covered components oracle") {
  CHECK(brute::covered_components(complete_graph(2)) == X() * X() + X() * Y() * Z());
  CHECK(brute::covered_components(edgeless_graph(3)) == X().pow(3));
  CHECK(brute::covered_components(complete_graph(3)) ==
        X().pow(3) + 3 * X().pow(2) * Y() * Z() + 3 * X() * Y().pow(2) * Z() +
            X() * Y().pow(3) * Z());
  CHECK(at(brute::covered_components(complete_graph(4)), 2, 3, 3) == 27016);
}

TEST_CASE("matching and vertex set oracles") {
  CHECK(brute::matching_counts(edgeless_graph(3)) == ints({1}));
  CHECK(brute::matching_counts(complete_graph(3)) == ints({1, 3}));
  CHECK(brute::matching_counts(complete_graph(4)) == ints({1, 6, 3}));
  CHECK(brute::matching_counts(complete_graph(6)) == ints({1, 15, 45, 15}));
  CHECK(brute::dominating_counts(complete_graph(1)) == ints({0, 1}));
  CHECK(brute::dominating_counts(complete_graph(2)) == ints({0, 2, 1}));
  CHECK(brute::dominating_counts(complete_graph(3)) == ints({0, 3, 3, 1}));
  // path 0-1-2: {1} dominates alone
  CHECK(brute::dominating_counts(SmallGraph(3, {{0, 1}, {1, 2}})) == ints({0, 1, 3, 1}));
  CHECK(brute::independent_set_counts(complete_graph(4)) == ints({1, 4, 0, 0, 0}));
  CHECK(brute::clique_counts(complete_graph(4)) == ints({1, 4, 6, 4, 1}));
  CHECK(brute::proper_colorings(complete_graph(3), 3) == 6);
  CHECK(brute::proper_colorings(complete_graph(4), 3) == 0);
  CHECK(brute::proper_colorings(SmallGraph(3, {{0, 1}, {1, 2}}), 3) == 12);
}

TEST_CASE("regular graph counts") {
  CHECK(brute::regular_count(5, 3) == 0);
  CHECK(brute::regular_count(4, 3) == 1);
  CHECK(brute::regular_count(6, 3) == 70);
  CHECK(brute::regular_count(6, 2) == 70);
  CHECK_THROWS_AS(brute::regular_count(8, 3), BudgetExceeded);
}

TEST_CASE("verify_trinks") {
  auto k2 = brute::verify_trinks(complete_graph(2), {{2, 3, 6}});
  CHECK(k2.symbolic_pass);
  CHECK(k2.covered == X() * X() + X() * Y() * Z());
  REQUIRE(k2.points.size() == 1);
  CHECK(k2.points[0].xi_value == 16);
  CHECK(k2.points[0].covered_value == 16);
  CHECK(k2.pass());
  auto k3 = brute::verify_trinks(complete_graph(3), {{1, 1, 0}, {2, 2, 8}, {3, 2, 12}});
  CHECK(k3.pass());
  CHECK(brute::verify_trinks(SmallGraph(4, {{0, 1}, {2, 3}, {1, 2}}), {{2, 3, 0}}).pass());
}
