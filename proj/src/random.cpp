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

#include "sparsecode/random.hpp"

#include <algorithm>
#include <limits>

#include "sparsecode/errors.hpp"

namespace sparsecode {

std::uint64_t RandomSource::uniform(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform draw with an empty range");
  // Largest multiple of `bound` representable; reject draws above it.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

std::vector<std::size_t> RandomSource::distinct(std::size_t n, std::size_t count) {
  if (count > n) throw DomainError("cannot draw more distinct values than the range holds");
  // Partial Fisher-Yates.
  std::vector<std::size_t> pool(n);
  for (std::size_t j = 0; j < n; ++j) pool[j] = j;
  for (std::size_t j = 0; j < count; ++j) {
    auto pick = j + static_cast<std::size_t>(uniform(n - j));
    std::swap(pool[j], pool[pick]);
  }
  pool.resize(count);
  return pool;
}

RandomSource RandomSource::derive(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return RandomSource(z);
}

}  // namespace sparsecode
