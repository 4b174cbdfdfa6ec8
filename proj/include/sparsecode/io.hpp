// Copyright 2026 The sparsecode Authors.
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

// Code files and report documents.
//
// Code file: {"q": int, "n": int, "generators": [[int, ...], ...]}.
// Exact rationals are written as {"num": "<decimal>", "den": "<decimal>"} so
// that no JSON reader has to hold a big integer.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sparsecode/code.hpp"
#include "sparsecode/exact.hpp"
#include "sparsecode/report.hpp"
#include "sparsecode/tester.hpp"

namespace sparsecode {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "sparsecode";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Throws ParseError naming the line or field at fault.
LinearCode parse_code(std::string_view text);
LinearCode load_code(const std::filesystem::path& path);
// Canonical text; parse_code(serialize_code(c)) re-serializes identically.
std::string serialize_code(const LinearCode& code);

// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

Json to_json(const Rational& x);
Json to_json(const Integer& x);
// Throws ParseError.
Rational rational_from_json(const Json& j);

struct ReportDocument {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::string command;
  std::optional<std::string> timestamp;
  Json config = Json::object();
  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<std::pair<std::string, std::vector<Integer>>> tables;
  std::vector<std::pair<std::string, MonteCarloEstimate>> montecarlo;
  std::optional<std::string> error;

  void add_rows(const VerificationReport& report);
  std::size_t hard_failures() const;

  friend bool operator==(const ReportDocument&, const ReportDocument&);
};

Json to_json(const ReportDocument& doc);
// Throws ParseError.
ReportDocument report_from_json(const Json& j);
// Rows only: checkName,lhs_num,lhs_den,rhs_num,rhs_den,pass,note.
std::string to_csv(const ReportDocument& doc);

}  // namespace sparsecode
