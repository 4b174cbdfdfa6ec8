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

// Command-line front end. Exit codes: 0 all hard rows pass, 1 a hard row or
// experiment failed, 2 usage or parse error, 3 enumeration guard exceeded.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sparsecode/code.hpp"
#include "sparsecode/io.hpp"
#include "sparsecode/random.hpp"

namespace sparsecode {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitGuard = 3 };

inline constexpr std::uint64_t kDefaultGuardLimit = 100'000'000;

struct CliOptions {
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> n;
  std::optional<std::size_t> dim;
  std::string k;  // number or "auto"
  std::optional<std::size_t> kmax;
  std::string t = "1";
  std::string gamma = "1";
  std::string c = "1";
  std::string delta = "1/4";
  std::string tau = "1/4";
  std::string slack = "1/20";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  std::string format = "json";
  bool no_timestamp = false;
  std::string word;    // comma-separated symbols
  std::string errors;  // "pos:value,..." or "none"
  std::optional<std::size_t> index;
  std::string max_bias;
  std::string inject_weights;  // test hook: replaces the primal distribution
  std::string inject_dual;     // test hook: a claimed dual word
  std::uint64_t guard_limit = kDefaultGuardLimit;
};

// Reads SPARSECODE_GUARD_LIMIT, falling back to kDefaultGuardLimit.
std::uint64_t guard_limit_from_env();

// Each fills `doc`; failed checks become rows. On a throw, `doc` keeps the
// config echo gathered so far so that the caller can still emit it.
void run_inspect(const CliOptions& opts, ReportDocument& doc);
void run_macwilliams(const CliOptions& opts, ReportDocument& doc);
void run_test(const CliOptions& opts, ReportDocument& doc);
void run_correct(const CliOptions& opts, ReportDocument& doc);
void run_verify(const CliOptions& opts, ReportDocument& doc);

// Random full-rank generator matrix; retries until bias <= max_bias when given.
// Throws BiasUnreachable with the best bias seen.
LinearCode generate_code(std::uint64_t q, std::size_t n, std::size_t dim, std::uint64_t seed,
                         const std::optional<Rational>& max_bias);

Word random_codeword(const LinearCode& code, RandomSource& rng);
// `count` distinct positions, each shifted by a uniform non-zero value.
Word corrupt(const Word& w, std::size_t count, RandomSource& rng);
// "1,0,2" -> Word. Throws ParseError.
Word parse_word(FieldSpec field, std::size_t n, const std::string& text);

// Full command line, argv[0] excluded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsecode
