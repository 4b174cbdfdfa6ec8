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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sparsecode/exact.hpp"

namespace sparsecode {

// kHard rows are exact finite claims; a failing one fails the report.
// kInformational rows carry finite-n data for claims that only hold
// asymptotically. kGated rows record an unmet hypothesis (or a claim that
// was evaluated although its hypothesis was unmet) and never fail a report.
enum class RowKind { kHard, kInformational, kGated };
enum class Relation { kLe, kLt, kEq, kGe, kGt };

std::string_view to_string(RowKind kind);
std::string_view to_string(Relation rel);
bool holds(const Rational& lhs, Relation rel, const Rational& rhs);

struct ReportRow {
  std::string check;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::kLe;
  bool pass = false;
  RowKind kind = RowKind::kHard;
  std::string note;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

class VerificationReport {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }

  // Adds a row whose verdict is `lhs rel rhs`, decided exactly.
  void compare(std::string check, Rational lhs, Relation rel, Rational rhs, RowKind kind,
               std::string note = {});

  // Records a hypothesis check. Returns `met`.
  bool hypothesis(std::string check, bool met, std::string note = {});

  void append(const VerificationReport& other);

  const std::vector<ReportRow>& rows() const { return rows_; }
  std::size_t hard_failures() const;
  bool ok() const { return hard_failures() == 0; }
  std::vector<const ReportRow*> failures() const;

 private:
  std::vector<ReportRow> rows_;
};

}  // namespace sparsecode
