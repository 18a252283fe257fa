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
#include <string>
#include <vector>

#include "knpoly/graph.hpp"

// Cross-validation suites: engine against oracle, and formulas against
// their claimed values.
namespace knpoly {

struct SuiteCase {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool passed() const;
  /// nullptr when every case passes
  const SuiteCase* first_failure() const;
};

struct SuiteOptions {
  int max_edges_subsets = EnumerationBudget{}.max_edges_subsets;
  int max_edges_pairs = EnumerationBudget{}.max_edges_pairs;
  std::uint64_t seed = 20240607;
  std::string golden_path;  // gessel-pak suite only
};

const std::vector<std::string>& suite_names();

SuiteResult verify_oracle(const SuiteOptions& opt);
SuiteResult verify_trinks(const SuiteOptions& opt);
SuiteResult verify_hermite(const SuiteOptions& opt);
SuiteResult verify_gessel_pak(const SuiteOptions& opt);
SuiteResult verify_redfield(const SuiteOptions& opt);
SuiteResult verify_dgraphs(const SuiteOptions& opt);
SuiteResult verify_closed_forms(const SuiteOptions& opt);

/// Dispatches by suite name; throws InvalidArgument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Random simple graphs on 4..max_n vertices, each with between half and
/// all of min(max_m, n(n-1)/2) edges.
std::vector<SmallGraph> random_graphs(std::uint64_t seed, int count, int max_n, int max_m);

/// Discrepancy table of the recurrence for n <= n_max, (a,b) in
/// {0..ab_max}^2, both base conventions; one line per cell.
std::string gessel_pak_table(int n_max = 6, int ab_max = 3);

}  // namespace knpoly
