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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knpoly/checkers.hpp"
#include "knpoly/modseq.hpp"

namespace knpoly {

inline constexpr const char* kSchemaVersion = "1";

/// {family, params, mu, preperiod, period, horizon, confirmed}; preperiod and
/// period are null when undetected.
nlohmann::ordered_json period_report_json(const std::string& family,
                                          const std::map<std::string, std::string>& params,
                                          std::uint64_t mu, long horizon,
                                          const std::optional<PeriodReport>& report);

nlohmann::ordered_json check_report_json(const CheckReport& report);
/// Aligned columns: header lines, then one line per leg and per row.
std::string check_report_text(const CheckReport& report);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

struct RunManifest {
  std::vector<std::string> command_line;
  std::map<std::string, std::string> params;
  std::map<std::string, long> limits;  // horizons and budgets
  std::string version = KNPOLY_VERSION;
  std::string digest;  // fnv1a_hex of everything written to stdout

  nlohmann::ordered_json to_json() const;
};

}  // namespace knpoly
