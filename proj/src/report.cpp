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

#include "knpoly/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace knpoly {

using ojson = nlohmann::ordered_json;

ojson period_report_json(const std::string& family,
                         const std::map<std::string, std::string>& params, std::uint64_t mu,
                         long horizon, const std::optional<PeriodReport>& report) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = family;
  j["params"] = ojson::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["mu"] = mu;
  j["preperiod"] = report ? ojson(report->preperiod) : ojson(nullptr);
  j["period"] = report ? ojson(report->period) : ojson(nullptr);
  j["horizon"] = horizon;
  j["confirmed"] = report ? report->confirmed : false;
  return j;
}

ojson check_report_json(const CheckReport& r) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["claim"] = r.claim;
  j["params"] = ojson::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["horizon"] = r.horizon;
  j["summary"] = r.summary;
  j["legs"] = ojson::array();
  for (const auto& leg : r.legs) {
    ojson l;
    l["name"] = leg.name;
    l["confirmed"] = leg.report.has_value();
    l["preperiod"] = leg.report ? ojson(leg.report->preperiod) : ojson(nullptr);
    l["period"] = leg.report ? ojson(leg.report->period) : ojson(nullptr);
    l["error"] = leg.error.empty() ? ojson(nullptr) : ojson(leg.error);
    j["legs"].push_back(std::move(l));
  }
  j["rows"] = ojson::array();
  for (const auto& row : r.rows) {
    j["rows"].push_back(ojson{{"n", row.n}, {"label", row.label}, {"lhs", row.lhs},
                              {"rhs", row.rhs}, {"verdict", row.verdict}});
  }
  j["notes"] = r.notes;
  return j;
}

std::string check_report_text(const CheckReport& r) {
  std::ostringstream out;
  out << "claim    " << r.claim << "\n";
  if (!r.params.empty()) {
    out << "params  ";
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "horizon  " << r.horizon << "\n";
  for (const auto& leg : r.legs) {
    out << "leg      " << leg.name << ": ";
    if (!leg.error.empty()) {
      out << "error " << leg.error;
    } else if (leg.report) {
      out << "period " << leg.report->period << " from n=" << leg.report->preperiod;
    } else {
      out << "undetected";
    }
    out << "\n";
  }
  for (const auto& note : r.notes) out << "note     " << note << "\n";
  if (!r.rows.empty()) {
    std::size_t wl = 5, wa = 3, wb = 3;
    for (const auto& row : r.rows) {
      wl = std::max(wl, row.label.size());
      wa = std::max(wa, row.lhs.size());
      wb = std::max(wb, row.rhs.size());
    }
    char buf[64];
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    out << "    n  " << pad("label", wl) << "  " << pad("lhs", wa) << "  " << pad("rhs", wb)
        << "  verdict\n";
    for (const auto& row : r.rows) {
      std::snprintf(buf, sizeof buf, "%5ld  ", row.n);
      out << buf << pad(row.label, wl) << "  " << pad(row.lhs, wa) << "  " << pad(row.rhs, wb)
          << "  " << row.verdict << "\n";
    }
  }
  out << "summary  " << r.summary << "\n";
  return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ojson RunManifest::to_json() const {
  ojson j;
  j["command_line"] = command_line;
  j["params"] = ojson::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["limits"] = ojson::object();
  for (const auto& [k, v] : limits) j["limits"][k] = v;
  j["version"] = version;
  j["digest"] = digest;
  return j;
}

}  // namespace knpoly
