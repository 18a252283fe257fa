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

#include <string>

#include "knpoly/errors.hpp"

namespace knpoly::brute {
namespace {

// Counts of terms keyed by a bounded exponent triple. Dense storage keeps
// the innermost enumeration loops free of map lookups.
class Tally {
 public:
  Tally(std::array<int, 3> lo, std::array<int, 3> hi) : lo_(lo) {
    for (int i = 0; i < 3; ++i) span_[i] = hi[i] - lo[i] + 1;
    cells_.assign(static_cast<std::size_t>(span_[0]) * span_[1] * span_[2], 0);
  }

  void add(int e0, int e1, int e2) {
    ++cells_[(static_cast<std::size_t>(e0 - lo_[0]) * span_[1] + (e1 - lo_[1])) * span_[2] +
             (e2 - lo_[2])];
  }

  LaurentPoly to_poly(const std::vector<std::string>& names) const {
    LaurentPoly::TermMap terms;
    std::size_t idx = 0;
    for (int i = 0; i < span_[0]; ++i) {
      for (int j = 0; j < span_[1]; ++j) {
        for (int k = 0; k < span_[2]; ++k, ++idx) {
          if (cells_[idx] == 0) continue;
          LaurentPoly::Exponents e{i + lo_[0], j + lo_[1], k + lo_[2]};
          e.resize(names.size());
          BigInt c;
          mpz_set_ui(c.get_mpz_t(), cells_[idx]);
          terms.emplace(std::move(e), std::move(c));
        }
      }
    }
    return LaurentPoly::from_terms(names, std::move(terms));
  }

 private:
  std::array<int, 3> lo_;
  std::array<int, 3> span_{};
  std::vector<std::uint64_t> cells_;
};

BigInt from_u64(std::uint64_t x) {
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), x);
  return out;
}

}  // namespace

LaurentPoly tutte(const SmallGraph& g, int max_edges) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n < 1) throw InvalidArgument("tutte: graph needs at least one vertex");
  ComponentCounter count(g);
  const int kappa_g = count(EdgeSubset{(m == 64) ? ~0ull : ((1ull << m) - 1)}).components;
  Tally tally({0, 0, 0}, {n, m, 0});
  edge_subsets(
      g,
      [&](EdgeSubset a) {
        int kappa = count(a).components;
        tally.add(kappa - kappa_g, a.size() + kappa - n, 0);
      },
      max_edges);
  // the tally holds exponents of (X-1) and (Y-1); shift back to X, Y
  LaurentPoly shifted = tally.to_poly({"X", "Y"});
  LaurentPoly result = poly_substitute(shifted, "X", LaurentPoly::variable("X") - 1);
  return poly_substitute(result, "Y", LaurentPoly::variable("Y") - 1);
}

LaurentPoly xi(const SmallGraph& g, int max_edges, XiPairs pairs) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  // endpoint bits per edge, over the (at most 2m) non-isolated vertices
  std::vector<std::uint64_t> ends;
  {
    std::vector<int> slot(n, -1);
    int next = 0;
    for (const auto& [u, v] : g.edges()) {
      if (slot[u] < 0) slot[u] = next++;
      if (slot[v] < 0) slot[v] = next++;
      ends.push_back((1ull << slot[u]) | (1ull << slot[v]));
    }
  }
  auto touched = [&](EdgeSubset s) {
    std::uint64_t vs = 0;
    for (std::uint64_t rest = s.mask; rest != 0; rest &= rest - 1) vs |= ends[__builtin_ctzll(rest)];
    return vs;
  };
  ComponentCounter count(g);
  Tally tally({-n, 0, 0}, {n, m, n});
  disjoint_edge_subset_pairs(
      g,
      [&](EdgeSubset a, EdgeSubset b) {
        if (pairs == XiPairs::VertexDisjoint && (touched(a) & touched(b))) return;
        ComponentStats s = count.pair(a, b);
        tally.add(s.components - s.covered_components,
                  a.size() + b.size() - s.covered_components, s.covered_components);
      },
      max_edges);
  return tally.to_poly({"X", "Y", "Z"});
}

LaurentPoly subgraph_counting(const SmallGraph& g, std::uint64_t max_terms) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n > 30) throw BudgetExceeded("subgraph_counting: too many vertices");
  const auto& edges = g.edges();

  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < (1ull << n); ++w) {
    int inside = 0;
    for (const auto& [u, v] : edges) inside += ((w >> u) & 1) && ((w >> v) & 1);
    if (inside > 62) throw BudgetExceeded("subgraph_counting: budget exceeded");
    total += 1ull << inside;
    if (total > max_terms) {
      throw BudgetExceeded("subgraph_counting: more than " + std::to_string(max_terms) +
                           " subgraphs");
    }
  }

  ComponentCounter count(g);
  Tally tally({0, 0, 0}, {n, n, m});
  for (std::uint64_t w = 0; w < (1ull << n); ++w) {
    std::vector<int> local;  // edge indices with both ends in W
    for (int i = 0; i < m; ++i) {
      if (((w >> edges[i].first) & 1) && ((w >> edges[i].second) & 1)) local.push_back(i);
    }
    const int size_w = __builtin_popcountll(w);
    const std::uint64_t sub_end = 1ull << local.size();
    for (std::uint64_t f = 0; f < sub_end; ++f) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < local.size(); ++i) {
        if ((f >> i) & 1) mask |= 1ull << local[i];
      }
      // vertices outside W are isolated in (V, F)
      int kappa_h = count(EdgeSubset{mask}).components - (n - size_w);
      tally.add(size_w, kappa_h, __builtin_popcountll(mask));
    }
  }
  return tally.to_poly({"X", "Y", "Z"});
}

LaurentPoly covered_components(const SmallGraph& g, int max_edges) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  ComponentCounter count(g);
  Tally tally({0, 0, 0}, {n, m, n});
  edge_subsets(
      g,
      [&](EdgeSubset a) {
        ComponentStats s = count(a);
        tally.add(s.components, a.size(), s.covered_components);
      },
      max_edges);
  return tally.to_poly({"X", "Y", "Z"});
}

std::vector<BigInt> matching_counts(const SmallGraph& g, int max_edges) {
  const auto& edges = g.edges();
  std::vector<std::uint64_t> counts(g.vertex_count() / 2 + 1, 0);
  edge_subsets(
      g,
      [&](EdgeSubset a) {
        std::uint64_t touched = 0;
        for (std::uint64_t rest = a.mask; rest != 0; rest &= rest - 1) {
          const auto& [u, v] = edges[__builtin_ctzll(rest)];
          std::uint64_t ends = (1ull << u) | (1ull << v);
          if (touched & ends) return;
          touched |= ends;
        }
        ++counts[a.size()];
      },
      max_edges);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  std::vector<BigInt> out;
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

std::vector<BigInt> dominating_counts(const SmallGraph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw BudgetExceeded("dominating_counts: n > 20");
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = 1ull << v;
  for (const auto& [u, v] : g.edges()) {
    closed[u] |= 1ull << v;
    closed[v] |= 1ull << u;
  }
  const std::uint64_t all = (n == 0) ? 0 : ((1ull << n) - 1);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s <= all; ++s) {
    std::uint64_t dominated = 0;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      dominated |= closed[__builtin_ctzll(rest)];
    }
    if (dominated == all) ++counts[__builtin_popcountll(s)];
  }
  std::vector<BigInt> out;
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

namespace {

// size distribution of vertex sets S where every pair in S is adjacent
// (want_edge) or every pair is non-adjacent (!want_edge)
std::vector<BigInt> uniform_set_counts(const SmallGraph& g, bool want_edge, const char* what) {
  const int n = g.vertex_count();
  if (n > 20) throw BudgetExceeded(std::string(what) + ": n > 20");
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t all = (n == 0) ? 0 : ((1ull << n) - 1);
  for (std::uint64_t s = 0; s <= all; ++s) {
    bool ok = true;
    for (std::uint64_t rest = s; rest != 0 && ok; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      const std::uint64_t others = s & ~(1ull << v);
      ok = want_edge ? (others & ~adj[v]) == 0 : (others & adj[v]) == 0;
    }
    if (ok) ++counts[__builtin_popcountll(s)];
  }
  std::vector<BigInt> out;
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

}  // namespace

std::vector<BigInt> independent_set_counts(const SmallGraph& g) {
  return uniform_set_counts(g, false, "independent_set_counts");
}

std::vector<BigInt> clique_counts(const SmallGraph& g) {
  return uniform_set_counts(g, true, "clique_counts");
}

BigInt proper_colorings(const SmallGraph& g, int b) {
  const int n = g.vertex_count();
  if (b < 0) throw InvalidArgument("proper_colorings: negative colour count");
  if (b == 0) return n == 0 ? 1 : 0;
  double total = 1;
  for (int i = 0; i < n; ++i) total *= b;
  if (total > double(1 << 24)) throw BudgetExceeded("proper_colorings: b^n > 2^24");
  std::vector<int> colour(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (colour[u] == colour[v]) {
        proper = false;
        break;
      }
    }
    count += proper;
    int i = 0;
    while (i < n && colour[i] == b - 1) colour[i++] = 0;
    if (i == n) break;
    ++colour[i];
  }
  return from_u64(count);
}

BigInt regular_count(int n, int d) {
  if (n < 0) throw InvalidArgument("regular_count: negative n");
  if (n > 7) throw BudgetExceeded("regular_count: n > 7 needs more than 2^21 graphs");
  if (d < 0) return 0;
  SmallGraph kn = complete_graph(n);
  const auto& edges = kn.edges();
  std::uint64_t count = 0;
  edge_subsets(kn, [&](EdgeSubset a) {
    if (a.size() * 2 != n * d) return;
    std::array<int, 8> degree{};
    for (std::uint64_t rest = a.mask; rest != 0; rest &= rest - 1) {
      const auto& [u, v] = edges[__builtin_ctzll(rest)];
      ++degree[u];
      ++degree[v];
    }
    for (int v = 0; v < n; ++v) {
      if (degree[v] != d) return;
    }
    ++count;
  });
  return from_u64(count);
}

std::vector<BigInt> connected_spanning_by_size(const SmallGraph& g, int max_edges) {
  ComponentCounter count(g);
  std::vector<std::uint64_t> counts(g.edge_count() + 1, 0);
  edge_subsets(
      g,
      [&](EdgeSubset a) {
        if (count(a).components == 1) ++counts[a.size()];
      },
      max_edges);
  std::vector<BigInt> out;
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

bool TrinksReport::pass() const {
  if (!symbolic_pass) return false;
  for (const auto& p : points) {
    if (!p.pass) return false;
  }
  return true;
}

TrinksReport verify_trinks(const SmallGraph& g, const std::vector<std::array<long, 3>>& points,
                           int max_edges_pairs) {
  TrinksReport report;
  LaurentPoly xi_poly = xi(g, max_edges_pairs);
  report.covered = covered_components(g);
  const auto X = LaurentPoly::variable("X");
  const auto Y = LaurentPoly::variable("Y");
  const auto Z = LaurentPoly::variable("Z");
  report.substituted = poly_substitute(xi_poly, "Z", X * Y * Z - X * Y);
  report.symbolic_pass = report.substituted == report.covered;

  for (const auto& [a, b, c] : points) {
    if (a == 0 || b == 0 || c % (a * b) != 0) continue;
    TrinksPoint pt{a, b, c, 0, 0, false};
    pt.xi_value = poly_eval_integer(xi_poly, {{"X", a}, {"Y", b}, {"Z", c}});
    pt.covered_value =
        poly_eval_integer(report.covered, {{"X", a}, {"Y", b}, {"Z", c / (a * b) + 1}});
    pt.pass = pt.xi_value == pt.covered_value;
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace knpoly::brute
