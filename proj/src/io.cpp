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

#include "sparsecode/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sparsecode/errors.hpp"

namespace sparsecode {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t unsigned_field(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) {
    throw ParseError("field '" + field + "': expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                     ": " + e.what());
  }
}

RowKind kind_from(const std::string& s) {
  for (RowKind k : {RowKind::kHard, RowKind::kInformational, RowKind::kGated}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown row kind '" + s + "'");
}

Relation relation_from(const std::string& s) {
  for (Relation r : {Relation::kLe, Relation::kLt, Relation::kEq, Relation::kGe, Relation::kGt}) {
    if (to_string(r) == s) return r;
  }
  throw ParseError("unknown relation '" + s + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

LinearCode parse_code(std::string_view text) {
  const Json j = parse_json(text);
  const std::uint64_t q = unsigned_field(member(j, "q", "code file"), "q");
  const std::uint64_t n = unsigned_field(member(j, "n", "code file"), "n");
  const Json& rows = member(j, "generators", "code file");
  if (!rows.is_array()) throw ParseError("field 'generators': expected an array");

  FieldSpec field = [&] {
    try {
      return FieldSpec::make(q);
    } catch (const Error& e) {
      throw ParseError("field 'q': " + std::string(e.what()));
    }
  }();
  std::vector<Word> generators;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = "generators[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_array()) throw ParseError("field '" + where + "': expected an array");
    if (row.size() != n) {
      throw ParseError("field '" + where + "': length " + std::to_string(row.size()) +
                       " differs from n=" + std::to_string(n));
    }
    std::vector<Symbol> symbols;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string cell = where + "[" + std::to_string(c) + "]";
      const std::uint64_t value = unsigned_field(row[c], cell);
      if (value >= q) throw ParseError("field '" + cell + "': not a residue mod q");
      symbols.push_back(static_cast<Symbol>(value));
    }
    generators.emplace_back(field, std::move(symbols));
  }
  try {
    return LinearCode::from_generators(field, n, generators);
  } catch (const ScanTooLarge&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("code file: " + std::string(e.what()));
  }
}

LinearCode load_code(const std::filesystem::path& path) { return parse_code(read_file(path)); }

std::string serialize_code(const LinearCode& code) {
  std::ostringstream out;
  out << "{\n  \"q\": " << code.q() << ",\n  \"n\": " << code.length()
      << ",\n  \"generators\": [";
  const auto& rows = code.generators();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r == 0 ? "\n    [" : ",\n    [");
    for (std::size_t c = 0; c < rows[r].length(); ++c) {
      out << (c == 0 ? "" : ", ") << rows[r][c];
    }
    out << "]";
  }
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

Json to_json(const Rational& x) {
  return Json{{"num", to_string(Integer(numerator(x)))},
              {"den", to_string(Integer(denominator(x)))}};
}

Json to_json(const Integer& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  const Json& num = member(j, "num", "rational");
  const Json& den = member(j, "den", "rational");
  if (!num.is_string() || !den.is_string()) {
    throw ParseError("rational: num and den must be decimal strings");
  }
  const std::string text = num.get<std::string>() + "/" + den.get<std::string>();
  return parse_rational(text);
}

void ReportDocument::add_rows(const VerificationReport& report) {
  rows.insert(rows.end(), report.rows().begin(), report.rows().end());
}

std::size_t ReportDocument::hard_failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
    return r.kind == RowKind::kHard && !r.pass;
  }));
}

bool operator==(const ReportDocument& a, const ReportDocument& b) {
  auto same_mc = [](const auto& x, const auto& y) {
    return x.first == y.first && x.second.trials == y.second.trials &&
           x.second.events == y.second.events && x.second.estimate == y.second.estimate &&
           x.second.seed == y.second.seed;
  };
  return a.tool == b.tool && a.version == b.version && a.command == b.command &&
         a.timestamp == b.timestamp && a.config == b.config && a.rows == b.rows &&
         a.values == b.values && a.tables == b.tables && a.error == b.error &&
         std::equal(a.montecarlo.begin(), a.montecarlo.end(), b.montecarlo.begin(),
                    b.montecarlo.end(), same_mc);
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["tool"] = doc.tool;
  j["version"] = doc.version;
  j["command"] = doc.command;
  if (doc.timestamp) j["timestamp"] = *doc.timestamp;
  j["config"] = doc.config;
  j["ok"] = doc.hard_failures() == 0 && !doc.error;
  j["hard_failures"] = doc.hard_failures();
  if (doc.error) j["error"] = *doc.error;

  Json rows = Json::array();
  for (const ReportRow& r : doc.rows) {
    rows.push_back(Json{{"check", r.check},
                        {"kind", to_string(r.kind)},
                        {"relation", to_string(r.relation)},
                        {"lhs", to_json(r.lhs)},
                        {"rhs", to_json(r.rhs)},
                        {"pass", r.pass},
                        {"note", r.note},
                        {"lhs_approx", to_double(r.lhs)},
                        {"rhs_approx", to_double(r.rhs)}});
  }
  j["rows"] = std::move(rows);

  Json values = Json::array();
  for (const auto& [name, x] : doc.values) {
    values.push_back(Json{{"name", name}, {"value", to_json(x)}, {"approx", to_double(x)}});
  }
  j["values"] = std::move(values);

  Json tables = Json::array();
  for (const auto& [name, entries] : doc.tables) {
    Json arr = Json::array();
    for (const Integer& e : entries) arr.push_back(to_json(e));
    tables.push_back(Json{{"name", name}, {"entries", std::move(arr)}});
  }
  j["tables"] = std::move(tables);

  Json mc = Json::array();
  for (const auto& [name, est] : doc.montecarlo) {
    mc.push_back(Json{{"name", name},
                      {"trials", est.trials},
                      {"events", est.events},
                      {"estimate", to_json(est.estimate)},
                      {"standard_error", est.standard_error},
                      {"seed", est.seed}});
  }
  j["montecarlo"] = std::move(mc);
  return j;
}

ReportDocument report_from_json(const Json& j) {
  try {
    ReportDocument doc;
    doc.tool = member(j, "tool", "report").get<std::string>();
    doc.version = member(j, "version", "report").get<std::string>();
    doc.command = member(j, "command", "report").get<std::string>();
    if (j.contains("timestamp")) doc.timestamp = j["timestamp"].get<std::string>();
    doc.config = member(j, "config", "report");
    if (j.contains("error")) doc.error = j["error"].get<std::string>();
    for (const Json& r : member(j, "rows", "report")) {
      ReportRow row;
      row.check = member(r, "check", "row").get<std::string>();
      row.kind = kind_from(member(r, "kind", "row").get<std::string>());
      row.relation = relation_from(member(r, "relation", "row").get<std::string>());
      row.lhs = rational_from_json(member(r, "lhs", "row"));
      row.rhs = rational_from_json(member(r, "rhs", "row"));
      row.pass = member(r, "pass", "row").get<bool>();
      row.note = member(r, "note", "row").get<std::string>();
      doc.rows.push_back(std::move(row));
    }
    for (const Json& v : member(j, "values", "report")) {
      doc.values.emplace_back(member(v, "name", "value").get<std::string>(),
                              rational_from_json(member(v, "value", "value")));
    }
    for (const Json& t : member(j, "tables", "report")) {
      std::vector<Integer> entries;
      for (const Json& e : member(t, "entries", "table")) {
        entries.push_back(Integer(e.get<std::string>()));
      }
      doc.tables.emplace_back(member(t, "name", "table").get<std::string>(),
                              std::move(entries));
    }
    for (const Json& m : member(j, "montecarlo", "report")) {
      MonteCarloEstimate est;
      est.trials = member(m, "trials", "montecarlo").get<std::uint64_t>();
      est.events = member(m, "events", "montecarlo").get<std::uint64_t>();
      est.estimate = rational_from_json(member(m, "estimate", "montecarlo"));
      est.standard_error = member(m, "standard_error", "montecarlo").get<double>();
      est.seed = member(m, "seed", "montecarlo").get<std::uint64_t>();
      doc.montecarlo.emplace_back(member(m, "name", "montecarlo").get<std::string>(), est);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string to_csv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "checkName,lhs_num,lhs_den,rhs_num,rhs_den,pass,note\n";
  for (const ReportRow& r : doc.rows) {
    out << csv_field(r.check) << ',' << Integer(numerator(r.lhs)) << ','
        << Integer(denominator(r.lhs)) << ',' << Integer(numerator(r.rhs)) << ','
        << Integer(denominator(r.rhs)) << ',' << (r.pass ? "true" : "false") << ','
        << csv_field(r.note) << '\n';
  }
  return out.str();
}

}  // namespace sparsecode
