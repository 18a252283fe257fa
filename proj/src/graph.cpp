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

#include "knpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "knpoly/errors.hpp"

namespace knpoly {

SmallGraph::SmallGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw InvalidGraph("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges_.emplace_back(u, v);
  }
  if (edges_.size() > 64) throw InvalidGraph("more than 64 edges not supported");
}

SmallGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  if (edges.size() > 64) {
    // masks are 64-bit; larger complete graphs are only used by the fast engine
    throw BudgetExceeded("complete_graph: K_" + std::to_string(n) + " exceeds 64 edges");
  }
  return SmallGraph(n, std::move(edges));
}

SmallGraph edgeless_graph(int n) { return SmallGraph(n, {}); }

SmallGraph read_graph(std::istream& in) {
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InvalidGraph("expected header `n m`");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v)) {
      throw InvalidGraph("expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return SmallGraph(static_cast<int>(n), std::move(edges));
}

SmallGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

DisjointSets::DisjointSets(int n) : parent_(n), size_(n), sets_(n) { reset(); }

void DisjointSets::reset() {
  std::iota(parent_.begin(), parent_.end(), 0);
  std::fill(size_.begin(), size_.end(), 1);
  sets_ = static_cast<int>(parent_.size());
}

int DisjointSets::find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

ComponentCounter::ComponentCounter(const SmallGraph& g)
    : g_(g), ds_(g.vertex_count()), stamp_(g.vertex_count(), 0) {}

void ComponentCounter::unite_all(std::uint64_t mask) {
  ds_.reset();
  const auto& edges = g_.edges();
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const auto& [u, v] = edges[__builtin_ctzll(rest)];
    ds_.unite(u, v);
  }
}

// distinct roots among endpoints of the edges in mask, in the current forest
int ComponentCounter::covered(std::uint64_t mask) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  int count = 0;
  const auto& edges = g_.edges();
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int r = ds_.find(edges[__builtin_ctzll(rest)].first);
    if (stamp_[r] != epoch_) {
      stamp_[r] = epoch_;
      ++count;
    }
  }
  return count;
}

ComponentStats ComponentCounter::operator()(EdgeSubset a) {
  unite_all(a.mask);
  return {ds_.set_count(), covered(a.mask)};
}

ComponentStats ComponentCounter::pair(EdgeSubset a, EdgeSubset b) {
  // c(B) is measured in (V, B) alone, kappa in (V, A | B)
  unite_all(b.mask);
  int c = covered(b.mask);
  const auto& edges = g_.edges();
  for (std::uint64_t rest = a.mask; rest != 0; rest &= rest - 1) {
    const auto& [u, v] = edges[__builtin_ctzll(rest)];
    ds_.unite(u, v);
  }
  return {ds_.set_count(), c};
}

ComponentStats component_stats(const SmallGraph& g, EdgeSubset a) {
  return ComponentCounter(g)(a);
}

ComponentStats component_stats_pair(const SmallGraph& g, EdgeSubset a, EdgeSubset b) {
  return ComponentCounter(g).pair(a, b);
}

int component_count(const SmallGraph& g, EdgeSubset a) {
  return component_stats(g, a).components;
}

int covered_component_count(const SmallGraph& g, EdgeSubset a) {
  return component_stats(g, a).covered_components;
}

void edge_subsets(const SmallGraph& g, const std::function<void(EdgeSubset)>& fn,
                  int max_edges) {
  const int m = g.edge_count();
  if (m > max_edges || m > 62) {
    throw BudgetExceeded("edge_subsets: " + std::to_string(m) + " edges exceeds budget of " +
                         std::to_string(max_edges));
  }
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < end; ++mask) fn(EdgeSubset{mask});
}

void disjoint_edge_subset_pairs(const SmallGraph& g,
                                const std::function<void(EdgeSubset, EdgeSubset)>& fn,
                                int max_edges) {
  const int m = g.edge_count();
  if (m > max_edges || m > 40) {
    throw BudgetExceeded("disjoint_edge_subset_pairs: 3^" + std::to_string(m) +
                         " pairs exceeds budget of 3^" + std::to_string(max_edges));
  }
  std::vector<std::uint8_t> digit(m, 0);
  std::uint64_t a = 0, b = 0;
  while (true) {
    fn(EdgeSubset{a}, EdgeSubset{b});
    int i = 0;
    // base-3 increment, updating the masks digit by digit
    while (i < m && digit[i] == 2) {
      digit[i] = 0;
      b &= ~(std::uint64_t{1} << i);
      ++i;
    }
    if (i == m) break;
    if (digit[i] == 0) {
      digit[i] = 1;
      a |= std::uint64_t{1} << i;
    } else {
      digit[i] = 2;
      a &= ~(std::uint64_t{1} << i);
      b |= std::uint64_t{1} << i;
    }
  }
}

}  // namespace knpoly
