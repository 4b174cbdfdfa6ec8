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

#include <filesystem>

#include <gtest/gtest.h>

#include "sparsecode/errors.hpp"
#include "test_codes.hpp"

namespace sparsecode {
namespace {

namespace fs = std::filesystem;

TEST(CodeFile, FixtureRoundTripsByteExact) {
  const fs::path path = fs::path(SPARSECODE_FIXTURE_DIR) / "repetition_q3_n3.json";
  const std::string text = read_file(path);
  const LinearCode code = parse_code(text);
  EXPECT_EQ(code.q(), 3u);
  EXPECT_EQ(code.length(), 3u);
  EXPECT_EQ(code.codewords(), testing::repetition3().codewords());
  EXPECT_EQ(serialize_code(code), text);
}

TEST(CodeFile, RoundTripOnTestCodes) {
  for (const LinearCode& c : {testing::hamming7(), testing::q5n6(), testing::q3n7(),
                              LinearCode::zero_code(FieldSpec::make(5), 4)}) {
    const std::string text = serialize_code(c);
    EXPECT_EQ(serialize_code(parse_code(text)), text);
    EXPECT_EQ(parse_code(text).codewords(), c.codewords());
  }
  EXPECT_NE(serialize_code(LinearCode::zero_code(FieldSpec::make(2), 2)).find("\"generators\": []"),
            std::string::npos);
}

TEST(CodeFile, ParseErrors) {
  EXPECT_THROW(parse_code(R"({"q": 3, "n": 3, "generators": [[1, 1)"), ParseError);
  EXPECT_THROW(parse_code(R"({"q": 3, "n": 3, "generators": [[1, 1, 3]]})"), ParseError);
  EXPECT_THROW(parse_code(R"({"q": 3, "n": 3, "generators": [[1, 1]]})"), ParseError);
  EXPECT_THROW(parse_code(R"({"q": 3, "generators": []})"), ParseError);
  EXPECT_THROW(parse_code(R"({"q": 4, "n": 2, "generators": []})"), ParseError);
  try {
    parse_code(R"({"q": 3, "n": 3, "generators": [[1, 1, 3]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("generators"), std::string::npos);
  }
}

TEST(CodeFile, AtomicWrite) {
  const fs::path dir = fs::temp_directory_path() / "sparsecode_io_test";
  fs::create_directories(dir);
  const fs::path p = dir / "code.json";
  write_atomic(p, "abc");
  EXPECT_EQ(read_file(p), "abc");
  EXPECT_FALSE(fs::exists(dir / "code.json.tmp"));
  fs::remove_all(dir);
  EXPECT_THROW(read_file(dir / "missing.json"), Error);
}

TEST(Json, Rationals) {
  const Rational x(-7, 12);
  EXPECT_EQ(rational_from_json(to_json(x)), x);
  EXPECT_EQ(to_json(x)["num"], "-7");
  EXPECT_EQ(to_json(x)["den"], "12");
  EXPECT_THROW(rational_from_json(Json::parse(R"({"num": "1", "den": "0"})")), ParseError);
  EXPECT_THROW(rational_from_json(Json::parse(R"({"num": "x", "den": "1"})")), ParseError);
}

ReportDocument sample_doc() {
  ReportDocument doc;
  doc.command = "verify";
  doc.config["q"] = 3;
  VerificationReport r;
  r.compare("a[k=1]", Rational(1, 3), Relation::kLe, Rational(1, 2), RowKind::kHard, "note, with comma");
  r.compare("b", Rational(2), Relation::kEq, Rational(3), RowKind::kInformational);
  doc.add_rows(r);
  doc.values.emplace_back("rej", Rational(2, 3));
  doc.tables.emplace_back("weights", std::vector<Integer>{1, 0, 0, 2});
  doc.montecarlo.emplace_back("rej_mc", MonteCarloEstimate{10, 7, Rational(7, 10), 0.1, 4});
  return doc;
}

TEST(Report, JsonRoundTrip) {
  ReportDocument doc = sample_doc();
  EXPECT_EQ(report_from_json(to_json(doc)), doc);
  doc.timestamp = "2026-01-01T00:00:00Z";
  doc.error = "DomainError: k too large";
  const Json j = to_json(doc);
  EXPECT_EQ(j["ok"], false);  // an error makes the report not ok
  EXPECT_EQ(j["hard_failures"], 0);
  EXPECT_EQ(report_from_json(j), doc);
  EXPECT_EQ(report_from_json(Json::parse(j.dump())), doc);
}

TEST(Report, Csv) {
  const std::string csv = to_csv(sample_doc());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "checkName,lhs_num,lhs_den,rhs_num,rhs_den,pass,note");
  EXPECT_NE(csv.find("a[k=1],1,3,1,2,true,\"note, with comma\""), std::string::npos);
  EXPECT_NE(csv.find("b,2,1,3,1,false,"), std::string::npos);
}

}  // namespace
}  // namespace sparsecode
