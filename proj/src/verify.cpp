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

#include "knpoly/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "knpoly/brute.hpp"
#include "knpoly/checkers.hpp"
#include "knpoly/complete.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"

namespace knpoly {
namespace {

std::string kn(int n) { return "K_" + std::to_string(n); }

void expect(SuiteResult& r, std::string label, bool ok, std::string detail = {}) {
  r.cases.push_back({std::move(label), ok, ok ? std::string() : std::move(detail)});
}

template <class T>
void expect_equal(SuiteResult& r, std::string label, const T& got, const T& want) {
  std::ostringstream d;
  d << "engine " << got << " oracle " << want;
  expect(r, std::move(label), got == want, d.str());
}

int edges_of(int n) { return n * (n - 1) / 2; }

BigInt poly_in_b(const std::vector<BigInt>& counts, const BigInt& b) {
  BigInt sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) sum += counts[k] * ipow(b, k);
  return sum;
}

LaurentPoly defect_from_counts(const std::vector<BigInt>& m, int n) {
  LaurentPoly sum;
  const auto X = LaurentPoly::variable("X");
  for (int k = 0; k < static_cast<int>(m.size()); ++k) {
    sum += LaurentPoly(k % 2 ? BigInt(-m[k]) : m[k]) * X.pow(static_cast<unsigned>(n - 2 * k));
  }
  return sum;
}

}  // namespace

bool SuiteResult::passed() const { return first_failure() == nullptr; }

const SuiteCase* SuiteResult::first_failure() const {
  for (const auto& c : cases) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle",   "trinks",  "hermite",     "gessel-pak",
                                              "redfield", "dgraphs", "closed-forms"};
  return names;
}

std::vector<SmallGraph> random_graphs(std::uint64_t seed, int count, int max_n, int max_m) {
  std::mt19937_64 rng(seed);
  std::vector<SmallGraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = std::uniform_int_distribution<int>(std::min(4, max_n), max_n)(rng);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    std::shuffle(all.begin(), all.end(), rng);
    // at least half the allowed edges, so components actually merge
    const int cap = std::min<int>(max_m, all.size());
    const int m = std::uniform_int_distribution<int>((cap + 1) / 2, cap)(rng);
    all.resize(m);
    out.emplace_back(n, std::move(all));
  }
  return out;
}

SuiteResult verify_oracle(const SuiteOptions& opt) {
  SuiteResult r{"oracle", {}};
  for (int n = 1; n <= 6 && edges_of(n) <= opt.max_edges_subsets; ++n) {
    const auto g = complete_graph(n);
    const auto brute_t = brute::tutte(g, opt.max_edges_subsets);
    expect_equal(r, "tutte symbolic " + kn(n), tutte_complete_symbolic(n), brute_t);
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        expect_equal(r, "tutte eval " + kn(n) + " at (" + std::to_string(a) + "," + std::to_string(b) + ")",
                     tutte_complete_eval(n, a, b),
                     poly_eval_integer(brute_t, {{"X", BigInt(a)}, {"Y", BigInt(b)}}));
      }
    }
    expect_equal(r, "covered components " + kn(n), c_complete(n),
                 brute::covered_components(g, opt.max_edges_subsets));
  }
  for (int n = 0; n <= 4; ++n) {
    expect_equal(r, "subgraph counting " + kn(n), s_complete(n),
                 brute::subgraph_counting(complete_graph(n)));
  }
  for (int n = 1; n <= 5 && edges_of(n) <= opt.max_edges_pairs; ++n) {
    expect_equal(r, "xi " + kn(n), xi_complete_symbolic(n),
                 brute::xi(complete_graph(n), opt.max_edges_pairs));
  }
  for (int n = 0; n <= 8 && edges_of(n) <= opt.max_edges_subsets; ++n) {
    const auto g = complete_graph(n);
    const auto counts = brute::matching_counts(g, opt.max_edges_subsets);
    std::ostringstream got, want;
    for (const auto& x : matching_complete(n)) got << x << " ";
    for (const auto& x : counts) want << x << " ";
    expect(r, "matching counts " + kn(n), matching_complete(n) == counts,
           "engine " + got.str() + "oracle " + want.str());
  }
  for (int n = 1; n <= 8; ++n) {
    for (int a : {0, 2, 3}) {
      for (int b : {0, 2, 3}) {
        if (a == 1 || b == 1) continue;
        BigInt lhs = tutte_complete_eval(n, a, b) * ipow(BigInt(b - 1), n) * (a - 1);
        expect_equal(r, "f_ab identity n=" + std::to_string(n), lhs, f_ab(n, a, b));
      }
    }
  }
  for (int mu = 2; mu <= 7; ++mu) {
    for (int a = 2; a <= 5; ++a) {
      for (int b = 2; b <= 5; ++b) {
        if (gcd_signed(a - 1, mu) != 1 || gcd_signed(b - 1, mu) != 1) continue;
        const auto fast = tutte_mod_sequence_fast(30, a, b, mu);
        const auto exact = tutte_complete_sequence(30, a, b);
        bool same = true;
        for (int i = 0; i < 30; ++i) same &= fast[i] == mod_reduce(exact[i], mu);
        expect(r, "modular fast path (a,b,mu)=(" + std::to_string(a) + "," + std::to_string(b) +
                      "," + std::to_string(mu) + ")",
               same, "fast and exact residues differ");
      }
    }
  }
  return r;
}

SuiteResult verify_trinks(const SuiteOptions& opt) {
  SuiteResult r{"trinks", {}};
  std::vector<std::array<long, 3>> points;
  for (long a = 1; a <= 3; ++a) {
    for (long b = 1; b <= 3; ++b) {
      for (long t = 0; t <= 2; ++t) points.push_back({a, b, a * b * t});
    }
  }
  auto run = [&](const std::string& label, const SmallGraph& g) {
    const auto rep = brute::verify_trinks(g, points, opt.max_edges_pairs);
    expect(r, label + " symbolic", rep.symbolic_pass,
           "xi(X,Y,XYZ-XY) = " + rep.substituted.to_string() + " but C = " + rep.covered.to_string());
    for (const auto& p : rep.points) {
      std::ostringstream d;
      d << "xi(" << p.a << "," << p.b << "," << p.c << ") = " << p.xi_value << ", C = " << p.covered_value;
      expect(r, label + " at (" + p.a.get_str() + "," + p.b.get_str() + "," + p.c.get_str() + ")",
             p.pass, d.str());
    }
  };
  for (int n = 2; n <= 5; ++n) run(kn(n), complete_graph(n));
  int i = 0;
  for (const auto& g : random_graphs(opt.seed, 20, 7, 12)) {
    run("random graph " + std::to_string(i++) + " (n=" + std::to_string(g.vertex_count()) +
            ", m=" + std::to_string(g.edge_count()) + ")",
        g);
  }
  return r;
}

SuiteResult verify_hermite(const SuiteOptions& opt) {
  SuiteResult r{"hermite", {}};
  for (int n = 0; n <= 10; ++n) {
    expect_equal(r, "He_" + std::to_string(n) + " vs alpha(" + kn(n) + ")", hermite_poly(n),
                 family_polynomial(FamilyId::DefectMatching, n));
    if (edges_of(n) <= std::min(opt.max_edges_subsets, 21)) {
      expect_equal(r, "He_" + std::to_string(n) + " vs brute alpha(" + kn(n) + ")", hermite_poly(n),
                   defect_from_counts(brute::matching_counts(complete_graph(n), opt.max_edges_subsets), n));
    }
  }
  return r;
}

std::string gessel_pak_table(int n_max, int ab_max) {
  std::ostringstream out;
  out << "# base n a b recursive one_step oracle agrees\n";
  for (auto base : {GesselPakBase::One, GesselPakBase::Zero}) {
    for (int n = 0; n <= n_max; ++n) {
      for (int a = 0; a <= ab_max; ++a) {
        for (int b = 0; b <= ab_max; ++b) {
          const auto g = gessel_pak(n, a, b, base);
          out << (base == GesselPakBase::One ? "T0=1" : "T0=0") << " " << n << " " << a << " " << b
              << " " << g.recursive << " " << g.one_step << " " << g.oracle << " "
              << (g.agrees ? "yes" : "no") << "\n";
        }
      }
    }
  }
  return out.str();
}

SuiteResult verify_gessel_pak(const SuiteOptions& opt) {
  SuiteResult r{"gessel-pak", {}};
  std::ifstream in(opt.golden_path);
  if (!in) {
    expect(r, "golden table", false, "cannot read " + opt.golden_path);
    return r;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::istringstream want(buf.str()), got(gessel_pak_table());
  std::string wl, gl;
  int line = 0;
  while (true) {
    const bool more_w = static_cast<bool>(std::getline(want, wl));
    const bool more_g = static_cast<bool>(std::getline(got, gl));
    ++line;
    if (!more_w && !more_g) break;
    if (more_w != more_g || wl != gl) {
      expect(r, "golden table line " + std::to_string(line), false,
             "computed '" + (more_g ? gl : std::string("<end>")) + "' committed '" +
                 (more_w ? wl : std::string("<end>")) + "'");
      return r;
    }
  }
  expect(r, "golden table (" + std::to_string(line - 1) + " lines)", true);
  const auto one = gessel_pak(1, 2, 3, GesselPakBase::One);
  expect(r, "n=1 recurrence yields a under T0=1, oracle 1", one.recursive == 2 && one.oracle == 1,
         "recursive " + one.recursive.get_str() + " oracle " + one.oracle.get_str());
  return r;
}

SuiteResult verify_redfield(const SuiteOptions&) {
  SuiteResult r{"redfield", {}};
  for (int n : {3, 5, 7}) {
    expect_equal(r, "odd n=" + std::to_string(n), redfield_r3(n), BigInt(0));
  }
  for (int n : {4, 6}) {
    const BigInt brute_count = brute::regular_count(n, 3);
    try {
      expect_equal(r, "n=" + std::to_string(n), redfield_r3(n), brute_count);
    } catch (const NonIntegralResult& e) {
      expect(r, "n=" + std::to_string(n), false,
             std::string(e.what()) + "; enumeration gives " + brute_count.get_str());
    }
  }
  return r;
}

SuiteResult verify_dgraphs(const SuiteOptions&) {
  SuiteResult r{"dgraphs", {}};
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto rep = check_dgraphs_congruence(p, 60 + static_cast<long>(p));
    std::string detail;
    for (const auto& row : rep.rows) {
      if (row.label == "displayed" && row.verdict == "fail") {
        detail = "n=" + std::to_string(row.n) + ": d(n+p) = " + row.lhs + " but product form gives " +
                 row.rhs + " (mod " + std::to_string(p) + ")";
        break;
      }
    }
    expect(r, "p=" + std::to_string(p) + ", n <= 60", rep.summary == "pass", detail);
  }
  return r;
}

SuiteResult verify_closed_forms(const SuiteOptions&) {
  SuiteResult r{"closed-forms", {}};
  for (int n = 1; n <= 7; ++n) {
    const auto g = complete_graph(n);
    const auto indep = brute::independent_set_counts(g);
    const auto cliques = brute::clique_counts(g);
    const auto dom = brute::dominating_counts(g);
    for (int b = 0; b <= 3; ++b) {
      const std::string at = " " + kn(n) + " b=" + std::to_string(b);
      expect_equal(r, "independence" + at, simple_closed_form(FamilyId::Independence, n, b),
                   poly_in_b(indep, b));
      expect_equal(r, "clique" + at, simple_closed_form(FamilyId::Clique, n, b), poly_in_b(cliques, b));
      expect_equal(r, "chromatic" + at, simple_closed_form(FamilyId::Chromatic, n, b),
                   brute::proper_colorings(g, b));
      expect_equal(r, "domination" + at, simple_closed_form(FamilyId::Domination, n, b),
                   poly_in_b(dom, b));
    }
  }
  for (int n = 0; n <= 8; ++n) {
    for (int a = 0; a <= 4; ++a) {
      const std::string at = " " + kn(n) + " a=" + std::to_string(a);
      expect_equal(r, "Mbar(a,1) = M(a)" + at, matching_family_eval(n, MatchingKind::Bivariate, a, 1),
                   matching_family_eval(n, MatchingKind::Generating, a));
      expect_equal(r, "Mbar(-1,a) = alpha(a)" + at,
                   matching_family_eval(n, MatchingKind::Bivariate, -1, a),
                   matching_family_eval(n, MatchingKind::Defect, a));
    }
  }
  return r;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "oracle") return verify_oracle(opt);
  if (name == "trinks") return verify_trinks(opt);
  if (name == "hermite") return verify_hermite(opt);
  if (name == "gessel-pak") return verify_gessel_pak(opt);
  if (name == "redfield") return verify_redfield(opt);
  if (name == "dgraphs") return verify_dgraphs(opt);
  if (name == "closed-forms") return verify_closed_forms(opt);
  throw InvalidArgument("unknown suite: " + name);
}

}  // namespace knpoly
