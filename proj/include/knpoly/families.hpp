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

#include "knpoly/bigint.hpp"
#include "knpoly/complete.hpp"
#include "knpoly/laurent.hpp"
#include "knpoly/modseq.hpp"

// Uniform access to the sequences n -> P(K_n; a, b, c) and a few auxiliary
// counting sequences, by name.
namespace knpoly {

struct FamilyParams {
  BigInt a = 1;
  BigInt b = 1;
  BigInt c = 1;
};

/// Family names plus the auxiliary sequences lucas-b2, dgraphs and hermite.
std::vector<std::string> sequence_names();
bool is_sequence_name(const std::string& name);

/// First index of the named sequence.
long sequence_start(const std::string& name);

/// Exact terms from sequence_start(name) through n_max.
std::vector<BigInt> exact_sequence(const std::string& name, const FamilyParams& p, long n_max);

/// Residues from sequence_start(name) through horizon, using modular
/// recurrences where the engine has them.
ResidueSequence residue_sequence(const std::string& name, const FamilyParams& p,
                                 std::uint64_t mu, long horizon);

/// P(K_n) at the given parameters.
BigInt family_value(FamilyId family, int n, const FamilyParams& p);

/// P(K_n) as a polynomial; simple closed forms and matchings are in X (and
/// Y for the bivariate matching polynomial).
LaurentPoly family_polynomial(FamilyId family, int n, const SymbolicBudget& budget = {});

/// Labeled graphs made of two equal-sized disjoint cliques: binom(2m,m)/2
/// for n = 2m >= 2, zero otherwise.
BigInt lucas_b2(long n);

/// Number of labeled graphs on n vertices, 2^(n choose 2).
BigInt dgraphs(long n);

}  // namespace knpoly
