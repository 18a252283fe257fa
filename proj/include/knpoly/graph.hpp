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
#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace knpoly {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with an explicit edge list.
/// Edges are stored with the smaller endpoint first, in insertion order;
/// that order fixes the bit positions of EdgeSubset masks.
class SmallGraph {
 public:
  SmallGraph() = default;
  /// Throws InvalidGraph on loops, duplicates or out-of-range endpoints.
  SmallGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// K_n with edges in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
SmallGraph complete_graph(int n);
SmallGraph edgeless_graph(int n);

/// Reads `n m` followed by m lines `u v` (0-based).
SmallGraph read_graph(std::istream& in);
SmallGraph parse_graph(const std::string& text);

/// Membership mask over a graph's edge list; bit i selects edges()[i].
struct EdgeSubset {
  std::uint64_t mask = 0;
  int size() const { return __builtin_popcountll(mask); }
  bool contains(int edge_index) const { return (mask >> edge_index) & 1u; }
};

/// Union-find over a fixed vertex count, path compression plus union by
/// size. Reusable across subsets via reset().
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  void reset();
  int find(int x);
  /// Returns true when x and y were in different sets.
  bool unite(int x, int y);
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

struct ComponentStats {
  int components = 0;          // kappa: isolated vertices included
  int covered_components = 0;  // c: components with at least one edge
};

/// kappa and c of the spanning subgraph (V(g), a).
ComponentStats component_stats(const SmallGraph& g, EdgeSubset a);
/// kappa of (V(g), a | b) together with c of (V(g), b).
ComponentStats component_stats_pair(const SmallGraph& g, EdgeSubset a, EdgeSubset b);

/// Reusable component counter for enumeration loops: owns its union-find
/// and scratch buffers, so repeated calls do not allocate.
class ComponentCounter {
 public:
  explicit ComponentCounter(const SmallGraph& g);
  ComponentStats operator()(EdgeSubset a);
  ComponentStats pair(EdgeSubset a, EdgeSubset b);

 private:
  int covered(std::uint64_t mask);
  void unite_all(std::uint64_t mask);

  const SmallGraph& g_;
  DisjointSets ds_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
};

int component_count(const SmallGraph& g, EdgeSubset a);
int covered_component_count(const SmallGraph& g, EdgeSubset a);

struct EnumerationBudget {
  int max_edges_subsets = 28;  // 2^m loops
  int max_edges_pairs = 15;    // 3^m loops
};

/// Calls fn once for each of the 2^m subsets, masks in increasing order.
/// Throws BudgetExceeded when m > budget.
void edge_subsets(const SmallGraph& g, const std::function<void(EdgeSubset)>& fn,
                  int max_edges = EnumerationBudget{}.max_edges_subsets);

/// Calls fn for every ordered pair (A, B) of disjoint edge subsets, 3^m in
/// total, in base-3 counting order (digit 1 puts an edge in A, 2 in B).
void disjoint_edge_subset_pairs(const SmallGraph& g,
                                const std::function<void(EdgeSubset, EdgeSubset)>& fn,
                                int max_edges = EnumerationBudget{}.max_edges_pairs);

}  // namespace knpoly
