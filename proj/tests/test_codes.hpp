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

// Small codes shared by the unit tests. Reference values for them come from
// tests/oracles/oracle.py.

#pragma once

#include <vector>

#include "sparsecode/code.hpp"

namespace sparsecode::testing {

inline Word word(FieldSpec f, std::vector<Symbol> s) { return Word(f, std::move(s)); }

inline LinearCode make_code(std::uint64_t q, std::size_t n,
                            const std::vector<std::vector<Symbol>>& rows) {
  const FieldSpec f = FieldSpec::make(q);
  std::vector<Word> words;
  for (const auto& r : rows) words.emplace_back(f, r);
  return LinearCode::from_generators(f, n, words);
}

inline LinearCode repetition3() { return make_code(3, 3, {{1, 1, 1}}); }

inline LinearCode hamming7() {
  return make_code(2, 7, {{1, 0, 0, 0, 1, 1, 0},
                          {0, 1, 0, 0, 1, 0, 1},
                          {0, 0, 1, 0, 0, 1, 1},
                          {0, 0, 0, 1, 1, 1, 1}});
}

inline LinearCode q5n6() { return make_code(5, 6, {{1, 2, 3, 4, 0, 1}, {0, 1, 1, 2, 3, 4}}); }

inline LinearCode q3n7() { return make_code(3, 7, {{1, 0, 1, 2, 1, 1, 0}, {0, 1, 2, 2, 1, 0, 1}}); }

}  // namespace sparsecode::testing
