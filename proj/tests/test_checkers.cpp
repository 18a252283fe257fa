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


#include <algorithm>

#include "knpoly/checkers.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"
#include "knpoly/report.hpp"
#include "util.hpp"

using namespace knpoly;

namespace {

const CheckRow* row_at(const CheckReport& r, long n, const std::string& label_prefix = "") {
  for (const auto& row : r.rows) {
    if (row.n == n && row.label.rfind(label_prefix, 0) == 0) return &row;
  }
  return nullptr;
}

bool all_rows_pass(const CheckReport& r, const std::string& label) {
  return std::all_of(r.rows.begin(), r.rows.end(), [&](const CheckRow& row) {
    return row.label != label || row.verdict == "pass";
  });
}

}  // namespace

TEST_CASE("theorem 1 scans") {
  auto r = check_theorem1(2, 3, 5, 500);
  REQUIRE(r.legs.size() == 1);
  REQUIRE(r.legs[0].report);
  CHECK(r.legs[0].report->confirmed);
  CHECK(r.legs[0].report->period == 8);
  CHECK(r.legs[0].report->preperiod == 1);
  CHECK(r.summary == "pass");
  CHECK(check_theorem1(2, 2, 3, 500).summary == "pass");
  CHECK_THROWS_AS(check_theorem1(3, 3, 2, 500), HypothesisViolation);
  CHECK_THROWS_WITH_AS(check_theorem1(2, 3, 2, 100), doctest::Contains("gcd(b-1, mu)"),
                       HypothesisViolation);
  CHECK_THROWS_AS(check_theorem1(1, 3, 5, 100), HypothesisViolation);
}

TEST_CASE("theorem 3 scans") {
  CHECK(check_theorem3(1, 1, 2, 300).summary == "pass");
  CHECK(check_theorem3(2, 3, 7, 2000).summary == "pass");
  // only the k = 0 term survives at a = 0, leaving b^n
  auto r = check_theorem3(0, 3, 7, 200);
  REQUIRE(r.legs[0].report);
  CHECK(r.legs[0].report->period == 6);
  CHECK(r.legs[0].report->preperiod == 1);
}

TEST_CASE("theorem 4 scans") {
  auto r = check_theorem4(1, 2, 2, 3, 500);
  REQUIRE(r.legs.size() == 3);
  for (const auto& leg : r.legs) CHECK(leg.report.has_value());
  CHECK(r.summary == "pass");
  auto bad = check_theorem4(2, 3, 5, 4, 500);
  CHECK(bad.legs[0].report.has_value());
  CHECK(bad.legs[1].report.has_value());
  CHECK_FALSE(bad.legs[2].report.has_value());
  CHECK(bad.legs[2].error.rfind("DivisibilityViolation", 0) == 0);
  CHECK(check_theorem4(1, 1, 1, 2, 500).summary == "pass");
}

TEST_CASE("Mani-Stones proposition branches") {
  auto p2 = check_mani_stones_prop(2, 1, 0, 1, 8);
  REQUIRE(row_at(p2, 2));
  CHECK(row_at(p2, 2)->verdict == "pass");
  CHECK(row_at(p2, 2)->lhs == "1");
  auto p22 = check_mani_stones_prop(2, 2, 0, 1, 8);
  REQUIRE(row_at(p22, 4));
  CHECK(row_at(p22, 4)->lhs == "2");
  CHECK(row_at(p22, 4)->verdict == "pass");
  auto p3 = check_mani_stones_prop(3, 1, 0, 1, 12);
  REQUIRE(row_at(p3, 3));
  CHECK(row_at(p3, 3)->rhs == "2");
  CHECK(row_at(p3, 3)->verdict == "pass");
  CHECK(p3.notes.at(0).find("T(K_m;1,b)") != std::string::npos);
  for (long b = -4; b <= 10; b += 2) {
    auto even = check_mani_stones_prop(2, 1, b, 2, 2);
    CHECK(even.rows.at(0).lhs == "1");
  }
  CHECK_THROWS_AS(check_mani_stones_prop(3, 1, 4, 1, 10), HypothesisViolation);
}

TEST_CASE("Mani-Stones conjecture tables") {
  auto r = check_mani_stones_conj(3, 1, 2, 0, 3, 12);
  CHECK(r.rows.size() == 10);
  CHECK(r.notes.at(0).rfind("case (i)", 0) == 0);
  auto first = check_mani_stones_conj(3, 1, 1, 2, 3, 3);
  REQUIRE(first.rows.size() == 1);
  CHECK(first.rows[0].label.find("a=1 mod p") != std::string::npos);
  auto two = check_mani_stones_conj(5, 1, 3, 6, 5, 10);
  CHECK(two.notes.at(0).rfind("case (ii)", 0) == 0);
  CHECK(two.rows.size() == 6);
  for (const auto& row : two.rows) CHECK((row.verdict == "pass" || row.verdict == "fail"));
  CHECK_THROWS_AS(check_mani_stones_conj(2, 1, 1, 0, 2, 5), InvalidArgument);
}

TEST_CASE("Carlitz checker") {
  auto r = check_carlitz(0, 3, 100);
  REQUIRE(row_at(r, 2));
  CHECK(row_at(r, 2)->verdict == "fail");
  CHECK(row_at(r, 2)->lhs == "2");
  CHECK(row_at(r, 2)->rhs == "0");
  CHECK(r.summary == "fail");
  CHECK(check_carlitz(1, 2, 200).legs[0].report.has_value());
  auto both = check_carlitz(2, 5, 500);
  CHECK(both.rows.size() == 501);
  CHECK(both.legs[0].report.has_value());
}

TEST_CASE("Lucas checker") {
  CHECK(lucas_b2(4) == 3);
  CHECK(lucas_b2(6) == 10);
  CHECK(lucas_b2(8) == 35);
  CHECK(lucas_b2(7) == 0);
  auto r = check_lucas(256);
  CHECK(r.failures() == 0);
  CHECK_FALSE(r.legs[0].report.has_value());
  CHECK(r.summary == "pass");
  CHECK_THROWS_AS(check_lucas(6), InvalidArgument);
}

TEST_CASE("d_Graphs congruence") {
  CHECK(dgraphs(4) == 64);
  auto p2 = check_dgraphs_congruence(2, 62);
  CHECK(p2.summary == "pass");
  // the displayed form fails at p = 3, n = 1: 2^6 = 1 but 2^0 * 2^3 = 2 mod 3
  auto p3 = check_dgraphs_congruence(3, 30);
  REQUIRE(row_at(p3, 1, "displayed"));
  CHECK(row_at(p3, 1, "displayed")->lhs == "1");
  CHECK(row_at(p3, 1, "displayed")->rhs == "2");
  CHECK(row_at(p3, 1, "displayed")->verdict == "fail");
  CHECK(all_rows_pass(p3, "with factor 2^n"));
  for (std::uint64_t p : {5u, 7u}) {
    auto r = check_dgraphs_congruence(p, 60 + p);
    CHECK(all_rows_pass(r, "with factor 2^n"));
  }
  CHECK_THROWS_AS(check_dgraphs_congruence(4, 20), InvalidArgument);
}

TEST_CASE("Redfield formula") {
  for (long n : {1, 3, 5, 7}) CHECK(redfield_r3(n) == 0);
  CHECK(redfield_r3_raw(4) == Rational(517894273, 3));
  CHECK_THROWS_AS(redfield_r3(4), NonIntegralResult);
  CHECK_THROWS_AS(redfield_r3(6), NonIntegralResult);
}

TEST_CASE("reports are deterministic and serialise") {
  auto a = check_report_json(check_theorem1(2, 3, 5, 300)).dump();
  auto b = check_report_json(check_theorem1(2, 3, 5, 300)).dump();
  CHECK(a == b);
  auto j = check_report_json(check_carlitz(0, 3, 10));
  CHECK(j["schema_version"] == "1");
  CHECK(j["claim"] == "carlitz");
  CHECK(j["rows"][2]["verdict"] == "fail");
  CHECK(j["legs"][0]["error"].is_null());
  auto p = period_report_json("tutte", {{"a", "2"}}, 5, 500, std::nullopt);
  CHECK(p["preperiod"].is_null());
  CHECK(p["confirmed"] == false);
  CHECK(check_report_text(check_carlitz(0, 3, 4)).find("fail") != std::string::npos);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("family sequences") {
  for (const auto& name : sequence_names()) CHECK(is_sequence_name(name));
  CHECK_FALSE(is_sequence_name("nope"));
  CHECK(sequence_start("hermite") == 0);
  CHECK(sequence_start("tutte") == 1);
  FamilyParams p{2, 3, 1};
  auto exact = exact_sequence("tutte", p, 40);
  auto res = residue_sequence("tutte", p, 5, 40);
  CHECK(res.start == 1);
  for (long n = 1; n <= 40; ++n) CHECK(res.at(n) == mod_reduce(exact[n - 1], 5));
  FamilyParams q{2, 3, 12};
  for (const char* name : {"matching", "gen-matching", "defect-matching", "subgraph", "covered",
                           "xi", "independence", "clique", "chromatic", "domination",
                           "interlace", "hermite", "dgraphs", "lucas-b2"}) {
    CAPTURE(name);
    auto e = exact_sequence(name, q, 20);
    auto r = residue_sequence(name, q, 6, 20);
    REQUIRE(e.size() == r.values.size());
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(r.values[i] == mod_reduce(e[i], 6));
  }
}
