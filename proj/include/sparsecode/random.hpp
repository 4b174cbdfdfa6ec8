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

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace sparsecode {

// Seeded stream with a platform-independent draw sequence: mt19937_64 is
// fully specified by the standard, and bounded draws use rejection on the
// raw 64-bit output instead of std::uniform_int_distribution (whose
// algorithm is implementation-defined).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);

  // `count` distinct values from [0, n), in draw order.
  std::vector<std::size_t> distinct(std::size_t n, std::size_t count);

  // Independent stream for (seed, index), e.g. per-trial or per-code seeds.
  static RandomSource derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace sparsecode
