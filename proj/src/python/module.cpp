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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "knpoly/brute.hpp"
#include "knpoly/checkers.hpp"
#include "knpoly/complete.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/families.hpp"
#include "knpoly/modseq.hpp"
#include "knpoly/report.hpp"
#include "knpoly/verify.hpp"

namespace py = pybind11;
using namespace knpoly;

namespace {

// Python ints cross the boundary as decimal strings, so no width limit applies.
BigInt to_big(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

FamilyParams params(const py::int_& a, const py::int_& b, const py::int_& c) {
  return {to_big(a), to_big(b), to_big(c)};
}

FamilyId family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw InvalidArgument("unknown family " + name);
  return *f;
}

SmallGraph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
  return SmallGraph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Tutte, matching and edge elimination polynomials of complete graphs";
  m.attr("__version__") = KNPOLY_VERSION;

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotDivisible>(m, "NotDivisible", error.ptr());
  py::register_exception<NonSubstitutable>(m, "NonSubstitutable", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<InvalidGraph>(m, "InvalidGraph", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<DivisibilityViolation>(m, "DivisibilityViolation", error.ptr());
  py::register_exception<ZeroVariable>(m, "ZeroVariable", error.ptr());
  py::register_exception<NonPrimeModulus>(m, "NonPrimeModulus", error.ptr());
  py::register_exception<InsufficientData>(m, "InsufficientData", error.ptr());
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", error.ptr());
  py::register_exception<NonIntegralResult>(m, "NonIntegralResult", error.ptr());

  m.def("families", [] {
    std::vector<std::string> out;
    for (auto f : all_families()) out.emplace_back(family_name(f));
    return out;
  });
  m.def("sequence_names", &sequence_names);

  m.def("tutte_symbolic", [](int n) { return tutte_complete_symbolic(n).to_string(); }, py::arg("n"));
  m.def("tutte_eval", [](int n, const py::int_& a, const py::int_& b) {
    return to_py(tutte_complete_eval(n, to_big(a), to_big(b)));
  }, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("tutte_eval_mod", [](int n, const py::int_& a, const py::int_& b, std::uint64_t mu) {
    return tutte_complete_eval_mod(n, to_big(a), to_big(b), mu);
  }, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("mu"));
  m.def("f_ab", [](int n, const py::int_& a, const py::int_& b) {
    return to_py(f_ab(n, to_big(a), to_big(b)));
  }, py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("polynomial", [](const std::string& family, int n) {
    return family_polynomial(family_or_throw(family), n).to_string();
  }, py::arg("family"), py::arg("n"));
  m.def("value", [](const std::string& family, int n, const py::int_& a, const py::int_& b,
                    const py::int_& c) {
    return to_py(family_value(family_or_throw(family), n, params(a, b, c)));
  }, py::arg("family"), py::arg("n"), py::arg("a") = 1, py::arg("b") = 1, py::arg("c") = 1);
  m.def("sequence", [](const std::string& name, long n_max, const py::int_& a, const py::int_& b,
                       const py::int_& c) {
    return to_py(exact_sequence(name, params(a, b, c), n_max));
  }, py::arg("name"), py::arg("n_max"), py::arg("a") = 1, py::arg("b") = 1, py::arg("c") = 1);
  m.def("residues", [](const std::string& name, std::uint64_t mu, long horizon, const py::int_& a,
                       const py::int_& b, const py::int_& c) {
    auto s = residue_sequence(name, params(a, b, c), mu, horizon);
    return py::make_tuple(s.start, s.values);
  }, py::arg("name"), py::arg("mu"), py::arg("horizon"), py::arg("a") = 1, py::arg("b") = 1,
     py::arg("c") = 1);
  m.def("matchings", [](int n) { return to_py(matching_complete(n)); }, py::arg("n"));
  m.def("hermite", [](int n) { return hermite_poly(n).to_string(); }, py::arg("n"));
  m.def("totient", &totient, py::arg("m"));

  m.def("brute_tutte", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return brute::tutte(graph_from(n, edges)).to_string();
  }, py::arg("n"), py::arg("edges"));
  m.def("brute_xi", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return brute::xi(graph_from(n, edges)).to_string();
  }, py::arg("n"), py::arg("edges"));
  m.def("brute_covered", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return brute::covered_components(graph_from(n, edges)).to_string();
  }, py::arg("n"), py::arg("edges"));

  m.def("detect_period", [](const std::vector<std::uint64_t>& values, std::uint64_t mu, long start,
                            int confirm_factor) -> py::object {
    auto r = detect_ultimate_period(ResidueSequence(mu, start, values), confirm_factor);
    if (!r) return py::none();
    py::dict d;
    d["preperiod"] = r->preperiod;
    d["period"] = r->period;
    d["horizon"] = r->horizon;
    d["confirmed"] = r->confirmed;
    return std::move(d);
  }, py::arg("values"), py::arg("mu"), py::arg("start") = 0, py::arg("confirm_factor") = 3);
  m.def("shortest_recurrence_mod_p", [](const std::vector<std::uint64_t>& values, std::uint64_t p) {
    return shortest_recurrence_mod_p(ResidueSequence(p, 0, values));
  }, py::arg("values"), py::arg("p"));
  m.def("find_integer_recurrence", [](const std::vector<py::int_>& values, int max_order) -> py::object {
    std::vector<BigInt> v;
    for (const auto& x : values) v.push_back(to_big(x));
    auto r = find_integer_recurrence(v, max_order);
    if (!r) return py::none();
    auto fraction = py::module_::import("fractions").attr("Fraction");
    py::list out;
    for (const auto& q : *r) out.append(fraction(to_py(q.get_num()), to_py(q.get_den())));
    return std::move(out);
  }, py::arg("values"), py::arg("max_order"));

  m.def("check_theorem1", [](std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon) {
    return from_json(check_report_json(check_theorem1(a, b, mu, horizon)));
  }, py::arg("a"), py::arg("b"), py::arg("mu"), py::arg("horizon"));
  m.def("check_theorem3", [](std::int64_t a, std::int64_t b, std::uint64_t mu, long horizon) {
    return from_json(check_report_json(check_theorem3(a, b, mu, horizon)));
  }, py::arg("a"), py::arg("b"), py::arg("mu"), py::arg("horizon"));
  m.def("check_theorem4", [](std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t mu,
                             long horizon) {
    return from_json(check_report_json(check_theorem4(a, b, c, mu, horizon)));
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("mu"), py::arg("horizon"));
  m.def("check_carlitz", [](std::int64_t a, std::uint64_t mu, long horizon) {
    return from_json(check_report_json(check_carlitz(a, mu, horizon)));
  }, py::arg("a"), py::arg("mu"), py::arg("horizon"));
  m.def("check_lucas", [](long horizon) { return from_json(check_report_json(check_lucas(horizon))); },
        py::arg("horizon"));

  m.def("verify", [](const std::string& suite, const std::string& golden_path) {
    SuiteOptions opt;
    opt.golden_path = golden_path;
    const auto r = run_suite(suite, opt);
    py::list failures;
    for (const auto& c : r.cases) {
      if (!c.pass) failures.append(py::make_tuple(c.label, c.detail));
    }
    return py::make_tuple(r.passed(), r.cases.size(), failures);
  }, py::arg("suite"), py::arg("golden_path") = "");
}
