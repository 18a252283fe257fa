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

// knpoly: exact graph polynomials of complete graphs from the command line.
//
// Exit codes: 0 success; 1 verification mismatch or internal error;
// 2 bad parameters or violated preconditions; 3 scan found no period.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knpoly/checkers.hpp"
#include "knpoly/complete.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"
#include "knpoly/modseq.hpp"
#include "knpoly/report.hpp"
#include "knpoly/verify.hpp"

#ifndef KNPOLY_GOLDEN_DIR
#define KNPOLY_GOLDEN_DIR "tests/golden"
#endif

namespace {

using knpoly::BigInt;
using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBadInput = 2;
constexpr int kUndetected = 3;

struct Globals {
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 20240607;
  int budget_edges = knpoly::EnumerationBudget{}.max_edges_subsets;
  long horizon = 0;  // 0: command default
};

struct Params {
  std::optional<std::string> a, b, c;
  std::optional<std::uint64_t> mu;

  BigInt get(const std::optional<std::string>& v, const char* name, bool required) const {
    if (!v) {
      if (required) throw knpoly::InvalidArgument(std::string("missing --") + name);
      return 1;
    }
    try {
      return BigInt(*v);
    } catch (const std::invalid_argument&) {
      throw knpoly::InvalidArgument(std::string("--") + name + " is not an integer: " + *v);
    }
  }

  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> out;
    if (a) out["a"] = *a;
    if (b) out["b"] = *b;
    if (c) out["c"] = *c;
    return out;
  }
};

void add_params(CLI::App* cmd, Params& p) {
  cmd->add_option("--a", p.a, "first evaluation point");
  cmd->add_option("--b", p.b, "second evaluation point");
  cmd->add_option("--c", p.c, "third evaluation point");
}

// which of a, b, c a sequence reads
std::string needed_params(const std::string& name) {
  auto f = knpoly::parse_family(name);
  if (!f) return name == "hermite" ? "a" : "";
  switch (*f) {
    case knpoly::FamilyId::Tutte:
    case knpoly::FamilyId::BivariateMatching:
      return "ab";
    case knpoly::FamilyId::GenMatching:
    case knpoly::FamilyId::DefectMatching:
      return "a";
    case knpoly::FamilyId::Xi:
    case knpoly::FamilyId::SubgraphCounting:
    case knpoly::FamilyId::CoveredComponents:
      return "abc";
    default:
      return "b";
  }
}

knpoly::FamilyParams family_params(const std::string& name, const Params& p) {
  const std::string need = needed_params(name);
  knpoly::FamilyParams fp;
  fp.a = p.get(p.a, "a", need.find('a') != std::string::npos);
  fp.b = p.get(p.b, "b", need.find('b') != std::string::npos);
  fp.c = p.get(p.c, "c", need.find('c') != std::string::npos);
  return fp;
}

std::string params_field(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

std::int64_t to_i64(const BigInt& x, const char* name) {
  if (!x.fits_slong_p()) throw knpoly::InvalidArgument(std::string("--") + name + " out of range");
  return x.get_si();
}

void require_sequence(const std::string& name) {
  if (!knpoly::is_sequence_name(name)) {
    std::string known;
    for (const auto& s : knpoly::sequence_names()) known += " " + s;
    throw knpoly::InvalidArgument("unknown family '" + name + "'; known:" + known);
  }
}

long default_horizon(std::uint64_t mu) { return mu <= 7 ? 500 : static_cast<long>(std::min<std::uint64_t>(75 * mu, 20000)); }

// ---- commands ------------------------------------------------------------------

struct Compute {
  std::string family;
  int n = -1;
  bool symbolic = false;
  Params p;
};

int run_compute(const Compute& c, const Globals& g, std::string& out, knpoly::RunManifest& m) {
  require_sequence(c.family);
  const auto family = knpoly::parse_family(c.family);
  std::string mode = c.symbolic ? "symbolic" : (c.p.mu ? "mod" : "eval");
  std::string value;
  if (c.symbolic) {
    if (family) {
      value = knpoly::family_polynomial(*family, c.n).to_string();
    } else if (c.family == "hermite") {
      value = knpoly::hermite_poly(c.n).to_string();
    } else {
      throw knpoly::InvalidArgument(c.family + " has no symbolic form");
    }
  } else {
    const auto fp = family_params(c.family, c.p);
    const long start = knpoly::sequence_start(c.family);
    if (c.n < start) throw knpoly::InvalidArgument("n must be at least " + std::to_string(start));
    BigInt v;
    if (family) {
      if (c.p.mu && *family == knpoly::FamilyId::Tutte) {
        value = std::to_string(knpoly::tutte_complete_eval_mod(c.n, fp.a, fp.b, *c.p.mu));
      } else {
        v = knpoly::family_value(*family, c.n, fp);
      }
    } else {
      v = knpoly::exact_sequence(c.family, fp, c.n).back();
    }
    if (value.empty()) {
      if (c.p.mu) {
        if (*c.p.mu < 2) throw knpoly::InvalidArgument("--mu must be at least 2");
        value = std::to_string(knpoly::mod_reduce(v, *c.p.mu));
      } else {
        value = v.get_str();
      }
    }
  }
  m.params = c.p.given();
  m.params["family"] = c.family;
  m.params["n"] = std::to_string(c.n);
  m.params["mode"] = mode;
  if (g.csv) {
    out += "family,params,mu,n,value\n";
    out += c.family + "," + params_field(c.p.given()) + "," + (c.p.mu ? std::to_string(*c.p.mu) : "") +
           "," + std::to_string(c.n) + "," + value + "\n";
  } else if (g.json) {
    ojson j;
    j["schema_version"] = knpoly::kSchemaVersion;
    j["family"] = c.family;
    j["n"] = c.n;
    j["mode"] = mode;
    j["params"] = c.p.given();
    if (c.p.mu) j["mu"] = *c.p.mu;
    j["value"] = value;
    out += j.dump(2) + "\n";
  } else {
    out += value + "\n";
  }
  return kOk;
}

struct Scan {
  std::string family;
  Params p;
  int confirm_factor = 3;
};

int run_scan(const Scan& s, const Globals& g, std::string& out, knpoly::RunManifest& m) {
  require_sequence(s.family);
  if (!s.p.mu) throw knpoly::InvalidArgument("missing --mu");
  const std::uint64_t mu = *s.p.mu;
  if (mu < 2) throw knpoly::InvalidArgument("--mu must be at least 2");
  const long horizon = g.horizon > 0 ? g.horizon : default_horizon(mu);
  const auto fp = family_params(s.family, s.p);
  m.params = s.p.given();
  m.params["family"] = s.family;
  m.params["mu"] = std::to_string(mu);
  m.limits["horizon"] = horizon;
  m.limits["confirm_factor"] = s.confirm_factor;

  knpoly::ResidueSequence seq;
  if (s.family == "tutte") {
    // enforces the gcd hypotheses before any work
    knpoly::check_theorem1(to_i64(fp.a, "a"), to_i64(fp.b, "b"), mu, 1);
  }
  seq = knpoly::residue_sequence(s.family, fp, mu, horizon);
  const auto report = knpoly::detect_ultimate_period(seq, s.confirm_factor);
  if (g.csv) {
    out += "family,params,mu,n,value\n";
    const std::string params = params_field(s.p.given());
    for (long n = seq.start; n <= seq.horizon(); ++n) {
      out += s.family + "," + params + "," + std::to_string(mu) + "," + std::to_string(n) + "," +
             std::to_string(seq.at(n)) + "\n";
    }
  } else {
    out += knpoly::period_report_json(s.family, s.p.given(), mu, horizon, report).dump(2) + "\n";
  }
  return report ? kOk : kUndetected;
}

struct Verify {
  std::string suite;
  std::string golden = std::string(KNPOLY_GOLDEN_DIR) + "/gessel_pak.txt";
  bool write_golden = false;
  bool verbose = false;
};

int run_verify(const Verify& v, const Globals& g, std::string& out, knpoly::RunManifest& m) {
  const auto& names = knpoly::suite_names();
  if (std::find(names.begin(), names.end(), v.suite) == names.end()) {
    throw knpoly::InvalidArgument("unknown suite '" + v.suite + "'");
  }
  m.params["suite"] = v.suite;
  m.limits["budget_edges"] = g.budget_edges;
  m.limits["seed"] = static_cast<long>(g.seed);
  if (v.write_golden) {
    if (v.suite != "gessel-pak") throw knpoly::InvalidArgument("--write-golden applies to gessel-pak");
    std::ofstream f(v.golden);
    if (!f) throw knpoly::InvalidArgument("cannot write " + v.golden);
    f << knpoly::gessel_pak_table();
    out += "wrote " + v.golden + "\n";
    return kOk;
  }
  knpoly::SuiteOptions opt;
  opt.max_edges_subsets = g.budget_edges;
  opt.seed = g.seed;
  opt.golden_path = v.golden;
  if (v.suite == "gessel-pak" && v.verbose) out += knpoly::gessel_pak_table();
  const auto result = knpoly::run_suite(v.suite, opt);
  std::size_t failures = 0;
  for (const auto& c : result.cases) failures += !c.pass;
  if (g.json) {
    ojson j;
    j["schema_version"] = knpoly::kSchemaVersion;
    j["suite"] = result.suite;
    j["passed"] = result.passed();
    j["cases"] = result.cases.size();
    j["failures"] = ojson::array();
    for (const auto& c : result.cases) {
      if (!c.pass) j["failures"].push_back(ojson{{"label", c.label}, {"detail", c.detail}});
    }
    out += j.dump(2) + "\n";
  } else {
    for (const auto& c : result.cases) {
      if (v.verbose || !c.pass) {
        out += (c.pass ? "ok    " : "FAIL  ") + c.label + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
      }
    }
    if (const auto* f = result.first_failure()) out += "first failure: " + f->label + "\n";
    out += "suite " + result.suite + ": " + std::to_string(result.cases.size()) + " cases, " +
           std::to_string(failures) + " failures\n";
  }
  return result.passed() ? kOk : kMismatch;
}

struct Conjecture {
  std::string name;
  std::optional<std::uint64_t> p, mu;
  int k = 1;
  std::optional<std::string> a, b;
  std::optional<long> n_min, n_max;
  bool text = false;
};

int run_conjecture(const Conjecture& c, const Globals& g, std::string& out, knpoly::RunManifest& m) {
  auto need_u = [](const std::optional<std::uint64_t>& x, const char* name) {
    if (!x) throw knpoly::InvalidArgument(std::string("missing --") + name);
    return *x;
  };
  auto need_i = [](const std::optional<std::string>& x, const char* name) {
    if (!x) throw knpoly::InvalidArgument(std::string("missing --") + name);
    Params p;
    return to_i64(p.get(x, name, true), name);
  };
  auto need_n = [](const std::optional<long>& x) {
    if (!x) throw knpoly::InvalidArgument("missing --nmax");
    return *x;
  };
  knpoly::CheckReport report;
  if (c.name == "mani-stones-prop") {
    report = knpoly::check_mani_stones_prop(need_u(c.p, "p"), c.k, need_i(c.b, "b"),
                                            c.n_min.value_or(1), need_n(c.n_max));
  } else if (c.name == "mani-stones-conj") {
    report = knpoly::check_mani_stones_conj(need_u(c.p, "p"), c.k, need_i(c.a, "a"), need_i(c.b, "b"),
                                            c.n_min.value_or(1), need_n(c.n_max));
  } else if (c.name == "carlitz") {
    const std::uint64_t mu = need_u(c.mu, "mu");
    report = knpoly::check_carlitz(need_i(c.a, "a"), mu, g.horizon > 0 ? g.horizon : default_horizon(mu));
  } else {
    throw knpoly::InvalidArgument("unknown conjecture '" + c.name +
                                  "'; known: mani-stones-prop mani-stones-conj carlitz");
  }
  m.params["name"] = c.name;
  for (const auto& [k, v] : report.params) m.params[k] = v;
  m.limits["horizon"] = report.horizon;
  if (g.csv) {
    out += "claim,params,n,label,lhs,rhs,verdict\n";
    std::map<std::string, std::string> params(report.params.begin(), report.params.end());
    for (const auto& row : report.rows) {
      out += report.claim + "," + params_field(params) + "," + std::to_string(row.n) + ",\"" +
             row.label + "\"," + row.lhs + "," + row.rhs + "," + row.verdict + "\n";
    }
  } else if (c.text) {
    out += knpoly::check_report_text(report);
  } else {
    out += knpoly::check_report_json(report).dump(2) + "\n";
  }
  return kOk;
}

struct Recurrence {
  std::string family;
  Params p;
  int max_order = 0;
  long n_max = 0;
};

int run_recurrence(const Recurrence& r, const Globals&, std::string& out, knpoly::RunManifest& m) {
  require_sequence(r.family);
  const auto fp = family_params(r.family, r.p);
  const long start = knpoly::sequence_start(r.family);
  if (r.max_order < 1) throw knpoly::InvalidArgument("--max-order must be positive");
  const long count = r.n_max - start + 1;
  if (count < 2L * r.max_order + 2) {
    throw knpoly::InsufficientData("window n=" + std::to_string(start) + ".." + std::to_string(r.n_max) +
                                   " has " + std::to_string(std::max(count, 0L)) + " terms; order " +
                                   std::to_string(r.max_order) + " needs " +
                                   std::to_string(2 * r.max_order + 2));
  }
  const auto values = knpoly::exact_sequence(r.family, fp, r.n_max);
  const auto rec = knpoly::find_integer_recurrence(values, r.max_order);
  m.params = r.p.given();
  m.params["family"] = r.family;
  m.limits["max_order"] = r.max_order;
  m.limits["nmax"] = r.n_max;
  ojson j;
  j["schema_version"] = knpoly::kSchemaVersion;
  j["family"] = r.family;
  j["params"] = r.p.given();
  j["window"] = {{"start", start}, {"end", r.n_max}};
  j["max_order"] = r.max_order;
  if (rec) {
    j["found"] = true;
    j["order"] = rec->size();
    std::vector<std::string> coeffs;
    std::string rhs;
    for (std::size_t i = 0; i < rec->size(); ++i) {
      coeffs.push_back(knpoly::to_string((*rec)[i]));
      if ((*rec)[i] == 0) continue;
      rhs += (rhs.empty() ? "" : " + ") + std::string("(") + coeffs.back() + ")*f(n-" + std::to_string(i + 1) + ")";
    }
    j["coefficients"] = coeffs;
    j["statement"] = "f(n) = " + (rhs.empty() ? std::string("0") : rhs);
  } else {
    j["found"] = false;
    j["order"] = nullptr;
    j["coefficients"] = nullptr;
    j["statement"] = "no linear recurrence of order <= " + std::to_string(r.max_order) +
                     " with constant rational coefficients holds on n=" + std::to_string(start) + ".." +
                     std::to_string(r.n_max);
  }
  out += j.dump(2) + "\n";
  return kOk;
}

void emit(const std::string& command, const std::string& out, knpoly::RunManifest& m,
          const Globals& g) {
  std::cout << out << std::flush;
  m.digest = knpoly::fnv1a_hex(out);
  std::cerr << "manifest " << m.to_json().dump() << "\n";
  if (const char* dir = std::getenv("KNPOLY_OUTPUT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    const std::string ext = g.csv ? ".csv" : (out.rfind("{", 0) == 0 ? ".json" : ".txt");
    std::ofstream f(std::filesystem::path(dir) / (command + "-" + m.digest + ext));
    f << out;
    std::ofstream mf(std::filesystem::path(dir) / (command + "-" + m.digest + ".manifest.json"));
    mf << m.to_json().dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph polynomials of complete graphs and their residues"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_flag("--csv", g.csv, "CSV rows family,params,mu,n,value");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--budget-edges", g.budget_edges, "largest edge count enumerated by the oracle");
  app.add_option("--horizon", g.horizon, "last index of scanned sequences");
  app.set_version_flag("--version", KNPOLY_VERSION);

  Compute compute;
  auto* c_cmd = app.add_subcommand("compute", "print a polynomial, value or residue for K_n");
  c_cmd->add_option("family", compute.family, "family name")->required();
  c_cmd->add_option("--n", compute.n, "number of vertices")->required();
  c_cmd->add_flag("--symbolic", compute.symbolic, "print the whole polynomial");
  c_cmd->add_option("--mu", compute.p.mu, "reduce the value mod mu");
  add_params(c_cmd, compute.p);

  Scan scan;
  auto* s_cmd = app.add_subcommand("scan", "look for an ultimate period of P(K_n) mod mu");
  s_cmd->add_option("family", scan.family, "family or sequence name")->required();
  s_cmd->add_option("--mu", scan.p.mu, "modulus")->required();
  s_cmd->add_option("--confirm-factor", scan.confirm_factor, "periods the tail must repeat")
      ->check(CLI::Range(2, 1000));
  add_params(s_cmd, scan.p);

  Verify verify;
  auto* v_cmd = app.add_subcommand("verify", "run a cross-validation suite");
  v_cmd->add_option("suite", verify.suite, "oracle|trinks|hermite|gessel-pak|redfield|dgraphs|closed-forms")
      ->required();
  v_cmd->add_option("--golden", verify.golden, "committed gessel-pak table");
  v_cmd->add_flag("--write-golden", verify.write_golden, "regenerate the gessel-pak table");
  v_cmd->add_flag("--verbose", verify.verbose, "print passing cases too");

  Conjecture conj;
  auto* j_cmd = app.add_subcommand("conjecture", "tabulate a conjectured congruence");
  j_cmd->add_option("name", conj.name, "mani-stones-prop|mani-stones-conj|carlitz")->required();
  j_cmd->add_option("--p", conj.p, "prime");
  j_cmd->add_option("--k", conj.k, "prime power exponent");
  j_cmd->add_option("--a", conj.a, "a");
  j_cmd->add_option("--b", conj.b, "b");
  j_cmd->add_option("--mu", conj.mu, "modulus (carlitz)");
  j_cmd->add_option("--nmin", conj.n_min, "first n");
  j_cmd->add_option("--nmax", conj.n_max, "last n");
  j_cmd->add_flag("--text", conj.text, "aligned text instead of JSON");

  Recurrence rec;
  auto* r_cmd = app.add_subcommand("recurrence", "search for a constant-coefficient linear recurrence");
  r_cmd->add_option("family", rec.family, "family or sequence name")->required();
  r_cmd->add_option("--max-order", rec.max_order, "largest order tried")->required();
  r_cmd->add_option("--nmax", rec.n_max, "last n of the window")->required();
  add_params(r_cmd, rec.p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }

  knpoly::RunManifest manifest;
  manifest.command_line.assign(argv, argv + argc);
  std::string out;
  std::string command;
  int code = kOk;
  try {
    if (*c_cmd) {
      command = "compute";
      code = run_compute(compute, g, out, manifest);
    } else if (*s_cmd) {
      command = "scan";
      code = run_scan(scan, g, out, manifest);
    } else if (*v_cmd) {
      command = "verify";
      code = run_verify(verify, g, out, manifest);
    } else if (*j_cmd) {
      command = "conjecture";
      code = run_conjecture(conj, g, out, manifest);
    } else if (*r_cmd) {
      command = "recurrence";
      code = run_recurrence(rec, g, out, manifest);
    }
  } catch (const knpoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  emit(command, out, manifest, g);
  return code;
}
