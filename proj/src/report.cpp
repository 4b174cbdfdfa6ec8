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

#include "sparsecode/report.hpp"

namespace sparsecode {

std::string_view to_string(RowKind kind) {
  switch (kind) {
    case RowKind::kHard: return "hard";
    case RowKind::kInformational: return "info";
    case RowKind::kGated: return "gated";
  }
  return "?";
}

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
    case Relation::kEq: return "==";
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
  }
  return "?";
}

bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::kLe: return lhs <= rhs;
    case Relation::kLt: return lhs < rhs;
    case Relation::kEq: return lhs == rhs;
    case Relation::kGe: return lhs >= rhs;
    case Relation::kGt: return lhs > rhs;
  }
  return false;
}

void VerificationReport::compare(std::string check, Rational lhs, Relation rel, Rational rhs,
                                 RowKind kind, std::string note) {
  bool pass = holds(lhs, rel, rhs);
  rows_.push_back({std::move(check), std::move(lhs), std::move(rhs), rel, pass, kind,
                   std::move(note)});
}

bool VerificationReport::hypothesis(std::string check, bool met, std::string note) {
  if (note.empty()) note = met ? "hypothesis met" : "hypothesis not met";
  rows_.push_back({std::move(check), met ? 1 : 0, 1, Relation::kEq, met,
                   met ? RowKind::kInformational : RowKind::kGated, std::move(note)});
  return met;
}

void VerificationReport::append(const VerificationReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::size_t VerificationReport::hard_failures() const {
  std::size_t count = 0;
  for (const auto& r : rows_) count += r.kind == RowKind::kHard && !r.pass;
  return count;
}

std::vector<const ReportRow*> VerificationReport::failures() const {
  std::vector<const ReportRow*> out;
  for (const auto& r : rows_) {
    if (r.kind == RowKind::kHard && !r.pass) out.push_back(&r);
  }
  return out;
}

}  // namespace sparsecode
