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
#include <set>

#include "knpoly/errors.hpp"
#include "knpoly/graph.hpp"
#include "util.hpp"

using namespace knpoly;

namespace {
EdgeSubset full(const SmallGraph& g) { return {(1ull << g.edge_count()) - 1}; }
}  // namespace

TEST_CASE("complete_graph") {
  CHECK(complete_graph(0).vertex_count() == 0);
  CHECK(complete_graph(0).edge_count() == 0);
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_graph(4).edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("graph validation and parsing") {
  CHECK_THROWS_AS(SmallGraph(3, {{0, 0}}), InvalidGraph);
  CHECK_THROWS_AS(SmallGraph(3, {{0, 1}, {1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(SmallGraph(3, {{0, 3}}), InvalidGraph);
  CHECK(parse_graph("3 2\n0 1\n1 2\n") == SmallGraph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), InvalidGraph);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InvalidGraph);
}

TEST_CASE("component counts") {
  auto k4 = complete_graph(4), k3 = complete_graph(3);
  CHECK(component_count(k4, {0}) == 4);
  CHECK(component_count(k3, full(k3)) == 1);
  CHECK(component_count(k4, {1}) == 3);
  CHECK(covered_component_count(k4, {0}) == 0);
  // edges 01 and 23 form a perfect matching of K_4
  CHECK(covered_component_count(k4, {0b100001}) == 2);
  CHECK(covered_component_count(k3, full(k3)) == 1);
}

TEST_CASE("edge subset enumeration") {
  auto count = [](const SmallGraph& g) {
    std::set<std::uint64_t> seen;
    edge_subsets(g, [&](EdgeSubset a) { seen.insert(a.mask); });
    return seen.size();
  };
  CHECK(count(complete_graph(3)) == 8);
  CHECK(count(complete_graph(4)) == 64);
  CHECK(count(complete_graph(0)) == 1);
  CHECK_THROWS_AS(edge_subsets(complete_graph(5), [](EdgeSubset) {}, 9), BudgetExceeded);
}

TEST_CASE("disjoint pair enumeration") {
  auto count = [](const SmallGraph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    disjoint_edge_subset_pairs(g, [&](EdgeSubset a, EdgeSubset b) {
      CHECK((a.mask & b.mask) == 0);
      seen.insert({a.mask, b.mask});
    });
    return seen.size();
  };
  CHECK(count(complete_graph(2)) == 3);
  CHECK(count(complete_graph(3)) == 27);
  CHECK(count(complete_graph(0)) == 1);
  CHECK_THROWS_AS(disjoint_edge_subset_pairs(complete_graph(7), [](EdgeSubset, EdgeSubset) {}),
                  BudgetExceeded);
}

TEST_CASE("component invariants on random subsets") {
  std::mt19937_64 rng(314);
  for (int n = 1; n <= 7; ++n) {
    auto g = complete_graph(n);
    const int m = g.edge_count();
    CHECK(component_count(g, {0}) == n);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t mask = m == 0 ? 0 : rng() & ((1ull << m) - 1);
      EdgeSubset a{mask};
      const int k = component_count(g, a), c = covered_component_count(g, a);
      CHECK(1 <= k);
      CHECK(k <= n);
      CHECK(c <= k);
      std::set<int> touched;
      for (int e = 0; e < m; ++e) {
        if (a.contains(e)) {
          touched.insert(g.edges()[e].first);
          touched.insert(g.edges()[e].second);
        }
      }
      CHECK(k - c == n - static_cast<int>(touched.size()));
      CHECK(a.size() + k - n >= 0);
      for (int e = 0; e < m; ++e) {
        if (a.contains(e)) continue;
        EdgeSubset b{mask | (1ull << e)};
        CHECK(component_count(g, b) <= k);
        CHECK(covered_component_count(g, b) >= c - 1);
      }
    }
  }
}
